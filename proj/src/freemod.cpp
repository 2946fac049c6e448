#include "ncdisc/freemod.hpp"

#include <algorithm>

#include "ncdisc/errors.hpp"

namespace ncdisc {

CentralSubalgebra make_central(TwistedPtr ambient, std::vector<std::string> names, std::vector<TElem> elements) {
    if (names.size() != elements.size()) throw SchemaError("central subalgebra needs one name per element");
    std::vector<int> weights;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const TElem& f = elements[i];
        long d = ambient->degree(f);
        if (d <= 0) throw SchemaError("central generator " + names[i] + " must have positive degree");
        if (auto w = central_violation(*ambient, f))
            throw HypothesisError("central generator " + names[i] + " = " + ambient->str(f) +
                                  " is not central: commutator " + ambient->str(*w));
        weights.push_back(static_cast<int>(d));
    }
    return {std::move(ambient), make_vars(std::move(names), std::move(weights)), std::move(elements)};
}

CentralSubalgebra parse_central(TwistedPtr ambient, std::vector<std::string> names,
                                const std::vector<std::string>& elements) {
    std::vector<TElem> parsed;
    for (const auto& e : elements) parsed.push_back(ambient->parse(e));
    return make_central(std::move(ambient), std::move(names), std::move(parsed));
}

std::string BasisReport::str() const {
    if (ok) return "basis verified through degree " + std::to_string(checked_degree);
    return "basis check failed in degree " + std::to_string(degree) + " (" + kind + "): " + witness;
}

FreeModule::FreeModule(CentralSubalgebra r, std::vector<TElem> basis, long cap, long slack)
    : r_(std::move(r)), basis_(std::move(basis)), cap_(cap), slack_(slack) {
    if (basis_.empty()) throw SchemaError("basis must not be empty");
    for (const auto& z : basis_) {
        if (z.is_zero()) throw SchemaError("basis element is zero");
        basis_degree_.push_back(ambient()->degree(z));
    }
    if (slack_ < 0) slack_ = 2 * ambient()->base()->presentation().max_tail_defect();
    for (const auto& f : r_.gens) f_images_.push_back(ambient()->commutative_image(f));
}

TElem FreeModule::f_power(const Monomial& mu) const {
    if (mu.is_one()) return ambient()->one();
    {
        std::lock_guard lock(mutex_);
        auto it = f_powers_.find(mu);
        if (it != f_powers_.end()) return it->second;
    }
    int j = static_cast<int>(mu.exps.size()) - 1;
    while (mu.exps[j] == 0) --j;
    Monomial rest = mu;
    rest.exps[j] -= 1;
    rest.degree -= rvars()->weights[j];
    TElem out = ambient()->mul(f_power(rest), r_.gens[j]);
    std::lock_guard lock(mutex_);
    f_powers_.emplace(mu, out);
    return out;
}

TElem FreeModule::column(const Column& c) const {
    auto key = std::make_pair(c.mu, c.index);
    {
        std::lock_guard lock(mutex_);
        auto it = columns_.find(key);
        if (it != columns_.end()) return it->second;
    }
    TElem out = ambient()->mul(f_power(c.mu), basis_[c.index]);
    std::lock_guard lock(mutex_);
    columns_.emplace(std::move(key), out);
    return out;
}

const FreeModule::DegreeSystem& FreeModule::system(long d) const {
    {
        std::lock_guard lock(mutex_);
        auto it = systems_.find(d);
        if (it != systems_.end()) return *it->second;
    }
    auto sys = std::make_unique<DegreeSystem>();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        long e = d - basis_degree_[i];
        if (e < 0) continue;
        for (auto& mu : monomials_of_degree(*rvars(), e)) sys->columns.push_back({std::move(mu), i});
    }
    std::vector<TElem> comps;
    for (const auto& c : sys->columns) {
        comps.push_back(ambient()->component(column(c), d));
        for (const auto& [m, p] : comps.back().parts)
            for (const auto& [mono, v] : p.terms()) sys->rows.emplace(std::make_pair(m, mono), sys->rows.size());
    }
    Mat a(sys->rows.size(), Vec(sys->columns.size(), Scalar(0)));
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (const auto& [m, p] : comps[c].parts)
            for (const auto& [mono, v] : p.terms()) a[sys->rows.at({m, mono})][c] = v;
    sys->solver = LinearSolver(a, sys->columns.size());
    std::lock_guard lock(mutex_);
    auto [it, fresh] = systems_.emplace(d, std::move(sys));
    return *it->second;
}

std::vector<FreeModule::Column> FreeModule::columns_up_to(long d) const {
    std::vector<Column> cols;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (long e = 0; e <= d - basis_degree_[i]; ++e)
            for (auto& mu : monomials_of_degree(*rvars(), e)) cols.push_back({std::move(mu), i});
    return cols;
}

std::string FreeModule::column_combination(const std::vector<Column>& cols, const Vec& v) const {
    std::vector<Poly> coeff(basis_.size(), Poly(rvars()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        if (!v[c].is_zero()) coeff[cols[c].index] += Poly::term(rvars(), cols[c].mu, v[c]);
    std::string s;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeff[i].str() + ")*(" + ambient()->str(basis_[i]) + ")";
    }
    return s + " = 0";
}

std::vector<Poly> FreeModule::express(const TElem& b) const {
    std::vector<Poly> coeffs(basis_.size(), Poly(rvars()));
    TElem rem = b;
    while (!rem.is_zero()) {
        long d = ambient()->degree(rem);
        if (d > cap_) throw CapExceeded("degree " + std::to_string(d) + " exceeds the cap " + std::to_string(cap_));
        const DegreeSystem& sys = system(d);
        Vec rhs(sys.rows.size(), Scalar(0));
        bool known = true;
        const TElem top = ambient()->component(rem, d);
        for (const auto& [m, p] : top.parts)
            for (const auto& [mono, v] : p.terms()) {
                auto it = sys.rows.find({m, mono});
                if (it == sys.rows.end()) {
                    known = false;
                } else {
                    rhs[it->second] = v;
                }
            }
        std::optional<Vec> sol;
        if (known && sys.solver.injective()) sol = sys.solver.solve(rhs);
        if (!sol) return express_global(b);
        for (std::size_t c = 0; c < sys.columns.size(); ++c) {
            const Scalar& v = (*sol)[c];
            if (v.is_zero()) continue;
            coeffs[sys.columns[c].index] += Poly::term(rvars(), sys.columns[c].mu, v);
            rem -= column(sys.columns[c]) * v;
        }
        if (ambient()->degree(rem) >= d) return express_global(b);
    }
    return coeffs;
}

std::vector<Poly> FreeModule::express_global(const TElem& b) const {
    long top = std::max(ambient()->degree(b), 0L) + slack_;
    if (top > cap_)
        throw CapExceeded("solving " + ambient()->str(b) + " needs degree " + std::to_string(top) + " above the cap " +
                          std::to_string(cap_));
    auto cols = columns_up_to(top);
    std::map<std::pair<long, Monomial>, std::size_t> rows;
    std::vector<TElem> elems;
    for (const auto& c : cols) {
        elems.push_back(column(c));
        for (const auto& [m, p] : elems.back().parts)
            for (const auto& [mono, v] : p.terms()) rows.emplace(std::make_pair(m, mono), rows.size());
    }
    for (const auto& [m, p] : b.parts)
        for (const auto& [mono, v] : p.terms())
            if (!rows.count({m, mono}))
                throw NoSolution(ambient()->str(b) + " is not in the span of the basis up to degree " +
                                 std::to_string(top) + " (term " + ambient()->str(ambient()->element(Poly::term(ambient()->base()->vars(), mono), m)) + ")");
    Mat a(rows.size(), Vec(cols.size(), Scalar(0)));
    for (std::size_t c = 0; c < elems.size(); ++c)
        for (const auto& [m, p] : elems[c].parts)
            for (const auto& [mono, v] : p.terms()) a[rows.at({m, mono})][c] = v;
    LinearSolver solver(a, cols.size());
    if (!solver.kernel().empty())
        throw AmbiguousSolution("basis is not independent: " + column_combination(cols, solver.kernel().front()));
    Vec rhs(rows.size(), Scalar(0));
    for (const auto& [m, p] : b.parts)
        for (const auto& [mono, v] : p.terms()) rhs[rows.at({m, mono})] = v;
    auto sol = solver.solve(rhs);
    if (!sol)
        throw NoSolution(ambient()->str(b) + " is not in the span of the basis up to degree " + std::to_string(top));
    std::vector<Poly> coeffs(basis_.size(), Poly(rvars()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        if (!(*sol)[c].is_zero()) coeffs[cols[c].index] += Poly::term(rvars(), cols[c].mu, (*sol)[c]);
    return coeffs;
}

BasisReport FreeModule::verify(long d) const {
    BasisReport report;
    for (long dd = 0; dd <= d; ++dd) {
        const DegreeSystem& sys = system(dd);
        auto monos = ambient()->monomials_of_degree(dd);
        const auto& solver = sys.solver;
        if (!solver.injective()) {
            report.ok = false;
            report.degree = dd;
            report.kind = "dependent";
            report.witness = column_combination(sys.columns, solver.kernel().front());
            return report;
        }
        if (solver.rank() < monos.size()) {
            report.ok = false;
            report.degree = dd;
            report.kind = "missing";
            for (const auto& [mono, m] : monos) {
                auto it = sys.rows.find({m, mono});
                bool spanned = false;
                if (it != sys.rows.end()) {
                    Vec rhs(sys.rows.size(), Scalar(0));
                    rhs[it->second] = 1;
                    spanned = solver.solve(rhs).has_value();
                }
                if (!spanned) {
                    report.witness =
                        ambient()->str(ambient()->element(Poly::term(ambient()->base()->vars(), mono), m)) +
                        " is not in the span of the basis";
                    break;
                }
            }
            return report;
        }
    }
    report.checked_degree = d;
    return report;
}

Poly FreeModule::trace(const TElem& b) const {
    Poly out(rvars());
    for (const auto& [m, p] : b.parts)
        for (const auto& [mono, c] : p.terms()) {
            auto key = std::make_pair(m, mono);
            std::optional<Poly> tr;
            {
                std::lock_guard lock(mutex_);
                auto it = mono_traces_.find(key);
                if (it != mono_traces_.end()) tr = it->second;
            }
            if (!tr) {
                TElem e = ambient()->element(Poly::term(ambient()->base()->vars(), mono), m);
                Poly s(rvars());
                for (std::size_t k = 0; k < basis_.size(); ++k) s += express(ambient()->mul(e, basis_[k]))[k];
                tr = s;
                std::lock_guard lock(mutex_);
                mono_traces_.emplace(key, s);
            }
            out += *tr * c;
        }
    return out;
}

TElem FreeModule::r_image(const Poly& r) const {
    TElem out;
    const Poly src = remap(r, rvars());
    for (const auto& [mu, c] : src.terms()) out += f_power(mu) * c;
    return out;
}

Poly FreeModule::ambient_image(const Poly& r) const {
    return substitute(remap(r, rvars()), f_images_, ambient()->ambient_vars());
}

std::vector<TElem> invariant_basis_suggest(const CentralSubalgebra& r, std::size_t rank, long d) {
    const auto& t = r.ambient;
    std::vector<TElem> chosen;
    std::vector<long> chosen_degree;
    for (long dd = 0; dd <= d && chosen.size() < rank; ++dd) {
        auto monos = t->monomials_of_degree(dd);
        std::map<std::pair<long, Monomial>, std::size_t> index;
        for (std::size_t i = 0; i < monos.size(); ++i) index[{monos[i].second, monos[i].first}] = i;
        auto vec_of = [&](const TElem& e) {
            Vec v(monos.size(), Scalar(0));
            const TElem comp = t->component(e, dd);
            for (const auto& [m, p] : comp.parts)
                for (const auto& [mono, c] : p.terms()) v[index.at({m, mono})] = c;
            return v;
        };
        Mat span;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            long e = dd - chosen_degree[i];
            for (const auto& mu : monomials_of_degree(*r.vars, e)) {
                TElem f = t->one();
                for (std::size_t j = 0; j < mu.exps.size(); ++j) f = t->mul(f, t->pow(r.gens[j], mu.exps[j]));
                span.push_back(vec_of(t->mul(f, chosen[i])));
            }
        }
        std::size_t current = ncdisc::rank(span, monos.size());
        for (const auto& [mono, m] : monos) {
            if (chosen.size() >= rank) break;
            TElem cand = t->element(Poly::term(t->base()->vars(), mono), m);
            span.push_back(vec_of(cand));
            std::size_t next = ncdisc::rank(span, monos.size());
            if (next > current) {
                current = next;
                chosen.push_back(cand);
                chosen_degree.push_back(dd);
            } else {
                span.pop_back();
            }
        }
    }
    if (chosen.size() < rank)
        throw CapExceeded("only " + std::to_string(chosen.size()) + " independent monomials found by degree " +
                          std::to_string(d));
    return chosen;
}

}  // namespace ncdisc
