#include <set>

#include "alba/syntax.hpp"

namespace alba {

namespace {

int level(Op op) {
    switch (op) {
        case Op::Imp: return 1;
        case Op::Or: return 2;
        case Op::And: return 3;
        default: return 4;
    }
}

void emit(const Formula& f, std::string& out);

void emit_at(const Formula& f, int min_level, std::string& out) {
    if (level(f.op()) < min_level) {
        out += '(';
        emit(f, out);
        out += ')';
    } else {
        emit(f, out);
    }
}

void emit(const Formula& f, std::string& out) {
    switch (f.op()) {
        case Op::Var:
            out += f.name();
            return;
        case Op::Nom:
            out += '@';
            out += f.name();
            return;
        case Op::Bot:
            out += 'F';
            return;
        case Op::Top:
            out += 'T';
            return;
        case Op::Not:
            out += '~';
            emit_at(f.child(0), 4, out);
            return;
        case Op::And:
        case Op::Or: {
            int l = level(f.op());
            emit_at(f.child(0), l, out);
            out += ' ';
            out += op_keyword(f.op());
            out += ' ';
            emit_at(f.child(1), l + 1, out);
            return;
        }
        case Op::Imp:
            emit_at(f.child(0), 2, out);
            out += " -> ";
            emit_at(f.child(1), 1, out);
            return;
        default:
            out += op_keyword(f.op());
            out += ' ';
            emit_at(f.child(0), 4, out);
            return;
    }
}

void nominal_order(const Formula& f, std::vector<std::string>& seen) {
    if (f.op() == Op::Nom) {
        for (const auto& s : seen)
            if (s == f.name()) return;
        seen.push_back(f.name());
        return;
    }
    for (int i = 0; i < arity(f.op()); ++i) nominal_order(f.child(i), seen);
}

}  // namespace

std::string render(const Formula& f) {
    std::string out;
    emit(f, out);
    return out;
}

std::string render(const Inequality& i) {
    return render(i.lhs) + (i.rel == Rel::Leq ? " <= " : " prec ") + render(i.rhs);
}

std::string render(const std::vector<Inequality>& is) {
    std::string out;
    for (std::size_t k = 0; k < is.size(); ++k) {
        if (k) out += " & ";
        out += render(is[k]);
    }
    return out;
}

std::string render(const MetaConjunction& m) { return render(m.items); }

std::string render(const QuasiInequality& q) { return render(q.antecedent) + " => " + render(q.consequent); }

std::string render(const Pi2Statement& s) {
    std::string out = render(s.antecedent) + " => E";
    for (const auto& b : s.bound) out += " " + b;
    out += ". (" + render(s.consequent) + ")";
    return out;
}

std::string render(const Statement& s) {
    return std::visit([](const auto& v) { return render(v); }, s);
}

std::string render_closed(const QuasiInequality& q) {
    std::vector<std::string> noms;
    bool trivial_ante = q.antecedent.empty() || (q.antecedent.size() == 1 && is_trivial(q.antecedent[0]));
    if (!trivial_ante)
        for (const auto& i : q.antecedent) {
            nominal_order(i.lhs, noms);
            nominal_order(i.rhs, noms);
        }
    for (const auto& i : q.consequent) {
        nominal_order(i.lhs, noms);
        nominal_order(i.rhs, noms);
    }
    std::string out;
    if (!noms.empty()) {
        out = "forall";
        for (const auto& n : noms) out += " @" + n;
        out += ". ";
    }
    if (!trivial_ante) out += render(q.antecedent) + " => ";
    out += render(q.consequent);
    return out;
}

}  // namespace alba
