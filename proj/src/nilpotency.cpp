#include "lieder/nilpotency.hpp"
#include "lieder/error.hpp"

#include <json.hpp>

#include <functional>
#include <random>

namespace lieder {

namespace {

int endo_dim(const Subspace& s) {
    int n = 0;
    while (n * n < s.ambient) ++n;
    if (n * n != s.ambient)
        fail(ErrorKind::PreconditionViolated, "ambient dimension is not a square");
    return n;
}

Matrix basis_row_matrix(const Subspace& s, int r, int n) {
    Vec row(size_t(n) * n);
    for (int c = 0; c < n * n; ++c) row[size_t(c)] = s.basis.at(r, c);
    return unvectorize(row, n);
}

} // namespace

SemisimpleLDer construct_semisimple_lder(const LieAlgebra& g) {
    int c = nilpotency_class(g);
    int q = (c + 1) / 2;

    SeriesChain lcs = lower_central_series(g);
    // terms[i] = gamma_{i+1}; class c means terms has c+1 entries ending at 0
    const Subspace& gq1 = size_t(q) < lcs.terms.size() ? lcs.terms[size_t(q)]
                                                       : zero_subspace(g.n);

    Matrix p = Matrix::identity(g.n);
    for (int r = 0; r < gq1.basis.rows; ++r) {
        int piv = -1;
        for (int cidx = 0; cidx < g.n; ++cidx)
            if (gq1.basis.at(r, cidx) != 0) { piv = cidx; break; }
        for (int cidx = 0; cidx < g.n; ++cidx)
            p.at(cidx, piv) += Rat(q) * gq1.basis.at(r, cidx);
    }
    return {q, p};
}

Matrix construct_strict_witness(const LieAlgebra& g, int k, int l, const SolverOptions& opt) {
    int c = nilpotency_class(g);
    if (k < 1 || l < 1) fail(ErrorKind::PreconditionViolated, "orders must be >= 1");
    if (k > c)
        fail(ErrorKind::PreconditionViolated,
             "k = " + std::to_string(k) + " exceeds the nilpotency class " + std::to_string(c));
    if (k % l != 1 % l)
        fail(ErrorKind::PreconditionViolated,
             "k = " + std::to_string(k) + " is not 1 modulo l = " + std::to_string(l));
    check_tuple_cap(g.n, k - 1, effective_tuple_cap(opt)); // n^k witness tuples

    SeriesChain lcs = lower_central_series(g);
    auto term = [&](int i) -> Subspace { // gamma_i
        return size_t(i) <= lcs.terms.size() ? lcs.terms[size_t(i) - 1] : zero_subspace(g.n);
    };
    Subspace gk1 = term(k + 1);

    // First (lexicographic) basis k-tuple whose nested bracket leaves gamma_{k+1}.
    Vec u;
    bool found = false;
    std::vector<int> idx(size_t(k), 0);
    while (!found) {
        std::vector<Vec> xs;
        xs.reserve(size_t(k));
        for (int j = 0; j < k; ++j) xs.push_back(unit_vec(g.n, idx[size_t(j)]));
        Vec cand = k == 1 ? xs[0] : nested_bracket(g, xs);
        if (!is_zero_vec(cand) && !contains(gk1, cand)) {
            u = cand;
            found = true;
            break;
        }
        int pos = k - 1;
        while (pos >= 0 && ++idx[size_t(pos)] == g.n) idx[size_t(pos--)] = 0;
        if (pos < 0) break;
    }
    if (!found)
        fail(ErrorKind::InternalInconsistency,
             "no basis bracket of depth " + std::to_string(k) + " leaves gamma_" +
                 std::to_string(k + 1));

    // Basis adapted to gamma_{k+1}: its rows, then u, then greedy unit vectors.
    RrefBuilder span(g.n);
    std::vector<Vec> adapted;
    for (int r = 0; r < gk1.basis.rows; ++r) {
        Vec row(size_t(g.n), Rat(0));
        for (int cidx = 0; cidx < g.n; ++cidx) row[size_t(cidx)] = gk1.basis.at(r, cidx);
        span.add(row);
        adapted.push_back(std::move(row));
    }
    span.add(u);
    size_t upos = adapted.size();
    adapted.push_back(u);
    for (int i = 0; i < g.n && int(adapted.size()) < g.n; ++i) {
        Vec e = unit_vec(g.n, i);
        if (span.add(e)) adapted.push_back(std::move(e));
    }
    if (int(adapted.size()) != g.n)
        fail(ErrorKind::InternalInconsistency, "adapted basis completion failed");

    Subspace ctr = center(g);
    if (ctr.dim() == 0)
        fail(ErrorKind::InternalInconsistency, "nilpotent algebra with trivial center");
    Vec z(size_t(g.n), Rat(0));
    for (int cidx = 0; cidx < g.n; ++cidx) z[size_t(cidx)] = ctr.basis.at(0, cidx);

    // P_z sends u to z and kills the rest of the adapted basis.
    Matrix m(g.n, g.n);
    for (int col = 0; col < g.n; ++col)
        for (int row = 0; row < g.n; ++row) m.at(row, col) = adapted[size_t(col)][size_t(row)];
    Matrix minv = inverse(m);
    Matrix pz(g.n, g.n);
    for (int row = 0; row < g.n; ++row)
        for (int col = 0; col < g.n; ++col)
            pz.at(row, col) = z[size_t(row)] * minv.at(int(upos), col);

    unsigned long long cap = effective_tuple_cap(opt);
    if (!is_leibniz_derivation(g, pz, k, cap))
        fail(ErrorKind::WitnessVerificationFailed,
             "constructed map is not an order-" + std::to_string(k) + " Leibniz-derivation");
    if (is_leibniz_derivation(g, pz, l, cap))
        fail(ErrorKind::WitnessVerificationFailed,
             "constructed map unexpectedly satisfies the order-" + std::to_string(l) +
                 " identity");
    return pz;
}

std::optional<InvertibleLDer> find_invertible_element(const DerivationSpace& space, int trials,
                                                      unsigned long long seed,
                                                      const std::vector<Matrix>& extra) {
    if (trials < 0) fail(ErrorKind::PreconditionViolated, "trials must be >= 0");
    int n = endo_dim(space.space);

    auto certify = [&](const Matrix& p) -> std::optional<InvertibleLDer> {
        Rat d = det(p);
        if (d == 0) return std::nullopt;
        return InvertibleLDer{space.order, p, d};
    };

    Matrix id = Matrix::identity(n);
    if (contains(space.space, vectorize(id)))
        if (auto ev = certify(id)) return ev;
    for (int r = 0; r < space.space.basis.rows; ++r)
        if (auto ev = certify(basis_row_matrix(space.space, r, n))) return ev;
    for (const Matrix& p : extra) {
        if (!contains(space.space, vectorize(p)))
            fail(ErrorKind::InternalInconsistency, "injected candidate is outside the space");
        if (auto ev = certify(p)) return ev;
    }

    int d = space.space.dim();
    if (d == 0) return std::nullopt;

    // Per-order stream keeps results independent of scan interleaving.
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (unsigned long long)(space.order + 1)));
    for (int t = 0; t < trials; ++t) {
        Matrix p(n, n);
        for (int r = 0; r < d; ++r) {
            long long coef = (long long)(rng() % 131073ULL) - 65536; // [-2^16, 2^16]
            if (coef == 0) continue;
            Rat cr((long)coef);
            for (int cidx = 0; cidx < n * n; ++cidx)
                p.a[size_t(cidx)] += cr * space.space.basis.a[size_t(r) * (size_t(n) * n) + size_t(cidx)];
        }
        if (auto ev = certify(p)) return ev;
    }
    return std::nullopt;
}

NilpotencyCertificate nilpotency_by_main_theorem(const LieAlgebra& g, int trials,
                                                 unsigned long long seed,
                                                 const SolverOptions& opt) {
    NilpotencyCertificate cert;
    cert.algebra = g.name;
    for (int k = 1; k <= g.n; ++k) {
        DerivationSpace space = leibniz_derivation_space(g, k, opt);
        if (auto ev = find_invertible_element(space, trials, seed)) {
            cert.nilpotent = true;
            cert.evidence = std::move(*ev);
            return cert;
        }
    }
    cert.nilpotent = false;
    cert.evidence = NoInvertibleFound{g.n, trials, seed};
    return cert;
}

NilpotencyCertificate nilpotency_by_series(const LieAlgebra& g) {
    NilpotencyCertificate cert;
    cert.algebra = g.name;
    SeriesChain lcs = lower_central_series(g);
    const Subspace& last = lcs.terms.back();
    if (last.dim() == 0) {
        cert.nilpotent = true;
        cert.evidence = LcsVanishing{int(lcs.terms.size()) - 1, lcs};
    } else {
        cert.nilpotent = false;
        cert.evidence = LcsStabilizedNonzero{last};
    }
    return cert;
}

MinimalOrderResult minimal_invertible_order(const LieAlgebra& g, int trials,
                                            unsigned long long seed, const SolverOptions& opt) {
    int c = nilpotency_class(g); // throws NotNilpotent
    SemisimpleLDer proj = construct_semisimple_lder(g);
    for (int k = 1; k <= c; ++k) {
        DerivationSpace space = leibniz_derivation_space(g, k, opt);
        std::vector<Matrix> extra;
        if (k == proj.q) extra.push_back(proj.p);
        if (auto ev = find_invertible_element(space, trials, seed, extra))
            return {k, std::move(*ev)};
    }
    fail(ErrorKind::InternalInconsistency,
         "no invertible element up to the class despite the projection candidate");
}

GradingReport grading_check(const LieAlgebra& g, const Matrix& p, int k,
                            const SolverOptions& opt) {
    unsigned long long cap = effective_tuple_cap(opt);
    if (!is_leibniz_derivation(g, p, k, cap))
        fail(ErrorKind::NotADerivation,
             "operator is not an order-" + std::to_string(k) + " Leibniz-derivation");
    check_tuple_cap(g.n, k, cap);

    GradingReport rep;
    rep.decomposition.op = p;
    rep.decomposition.order = k;
    rep.decomposition.parts = generalized_eigenspaces(p);
    const auto& parts = rep.decomposition.parts;

    const size_t np = parts.size();
    std::vector<int> choice(size_t(k) + 1, 0);
    rep.ok = true;
    while (true) {
        GradingReport::TupleResult tr;
        tr.sum = 0;
        for (int j = 0; j <= k; ++j) {
            tr.alphas.push_back(parts[size_t(choice[size_t(j)])].value);
            tr.sum += tr.alphas.back();
        }
        const Subspace* target = nullptr;
        for (const auto& part : parts)
            if (part.value == tr.sum) { target = &part.space; break; }
        tr.target_exists = target != nullptr;

        // Span of nested brackets over all basis choices from the parts.
        tr.contained = true;
        std::function<void(int, const Vec&)> walk = [&](int pos, const Vec& suffix) {
            if (!tr.contained || is_zero_vec(suffix)) return;
            if (pos < 0) {
                if (target == nullptr || !contains(*target, suffix)) tr.contained = false;
                return;
            }
            const Subspace& part = parts[size_t(choice[size_t(pos)])].space;
            for (int r = 0; r < part.basis.rows; ++r) {
                Vec v(size_t(g.n), Rat(0));
                for (int cidx = 0; cidx < g.n; ++cidx) v[size_t(cidx)] = part.basis.at(r, cidx);
                walk(pos - 1, bracket(g, v, suffix));
            }
        };
        const Subspace& lastpart = parts[size_t(choice[size_t(k)])].space;
        for (int r = 0; r < lastpart.basis.rows && tr.contained; ++r) {
            Vec v(size_t(g.n), Rat(0));
            for (int cidx = 0; cidx < g.n; ++cidx) v[size_t(cidx)] = lastpart.basis.at(r, cidx);
            walk(k - 1, v);
        }

        rep.ok = rep.ok && tr.contained;
        rep.tuples.push_back(std::move(tr));

        int pos = k;
        while (pos >= 0 && size_t(++choice[size_t(pos)]) == np) choice[size_t(pos--)] = 0;
        if (pos < 0) break;
    }
    return rep;
}

int class_via_lder(const LieAlgebra& g, const SolverOptions& opt) {
    int n2 = g.n * g.n;
    for (int k = 1; k <= g.n; ++k)
        if (leibniz_derivation_space(g, k, opt).space.dim() == n2) return k;
    fail(ErrorKind::NotNilpotent,
         "no order k <= " + std::to_string(g.n) + " with a full derivation space");
}

namespace {

nlohmann::ordered_json matrix_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int r = 0; r < m.rows; ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(rat_str(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) fail(ErrorKind::ParseError, "matrix must be a nonempty array");
    int rows = int(j.size());
    int cols = int(j[0].size());
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!j[size_t(r)].is_array() || int(j[size_t(r)].size()) != cols)
            fail(ErrorKind::ParseError, "ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = parse_rat(j[size_t(r)][size_t(c)].get<std::string>());
    }
    return m;
}

} // namespace

std::string certificate_to_json(const NilpotencyCertificate& cert, int indent) {
    nlohmann::ordered_json j;
    j["algebra"] = cert.algebra;
    j["verdict"] = cert.nilpotent ? "nilpotent" : "not_nilpotent";
    j["evidence_kind"] = "";
    j["order"] = nullptr;
    j["matrix"] = nullptr;
    j["det"] = nullptr;
    j["seed"] = nullptr;
    j["trials"] = nullptr;
    if (const auto* ev = std::get_if<InvertibleLDer>(&cert.evidence)) {
        j["evidence_kind"] = "invertible_lder";
        j["order"] = ev->order;
        j["matrix"] = matrix_json(ev->p);
        j["det"] = rat_str(ev->det_value);
    } else if (const auto* nf = std::get_if<NoInvertibleFound>(&cert.evidence)) {
        j["evidence_kind"] = "no_invertible_found";
        j["order"] = nf->max_order;
        j["seed"] = nf->seed;
        j["trials"] = nf->trials;
    } else if (const auto* lv = std::get_if<LcsVanishing>(&cert.evidence)) {
        j["evidence_kind"] = "lcs_vanishing";
        j["order"] = lv->cls;
    } else {
        j["evidence_kind"] = "lcs_stabilized_nonzero";
    }
    return j.dump(indent) + "\n";
}

NilpotencyCertificate certificate_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("certificate JSON: ") + e.what());
    }
    NilpotencyCertificate cert;
    try {
        cert.algebra = j.at("algebra").get<std::string>();
        std::string verdict = j.at("verdict").get<std::string>();
        if (verdict != "nilpotent" && verdict != "not_nilpotent")
            fail(ErrorKind::ParseError, "unknown verdict '" + verdict + "'");
        cert.nilpotent = verdict == "nilpotent";
        std::string kind = j.at("evidence_kind").get<std::string>();
        if (kind == "invertible_lder") {
            InvertibleLDer ev;
            ev.order = j.at("order").get<int>();
            ev.p = matrix_from_json(j.at("matrix"));
            ev.det_value = parse_rat(j.at("det").get<std::string>());
            cert.evidence = std::move(ev);
        } else if (kind == "no_invertible_found") {
            NoInvertibleFound nf;
            nf.max_order = j.at("order").get<int>();
            nf.seed = j.at("seed").is_null() ? 0 : j.at("seed").get<unsigned long long>();
            nf.trials = j.at("trials").is_null() ? 0 : j.at("trials").get<int>();
            cert.evidence = nf;
        } else if (kind == "lcs_vanishing") {
            LcsVanishing lv;
            lv.cls = j.at("order").get<int>();
            cert.evidence = std::move(lv);
        } else if (kind == "lcs_stabilized_nonzero") {
            cert.evidence = LcsStabilizedNonzero{};
        } else {
            fail(ErrorKind::ParseError, "unknown evidence kind '" + kind + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("certificate JSON: ") + e.what());
    }
    return cert;
}

bool verify_certificate(const LieAlgebra& g, const NilpotencyCertificate& cert,
                        const SolverOptions& opt) {
    unsigned long long cap = effective_tuple_cap(opt);
    if (const auto* ev = std::get_if<InvertibleLDer>(&cert.evidence)) {
        if (!cert.nilpotent) return false;
        if (ev->order < 1 || ev->p.rows != g.n || ev->p.cols != g.n) return false;
        if (ev->det_value == 0 || det(ev->p) != ev->det_value) return false;
        return is_leibniz_derivation(g, ev->p, ev->order, cap);
    }
    SeriesChain lcs = lower_central_series(g);
    bool vanishes = lcs.terms.back().dim() == 0;
    if (const auto* lv = std::get_if<LcsVanishing>(&cert.evidence)) {
        return cert.nilpotent && vanishes && int(lcs.terms.size()) - 1 == lv->cls;
    }
    if (std::holds_alternative<LcsStabilizedNonzero>(cert.evidence))
        return !cert.nilpotent && !vanishes;
    // NoInvertibleFound: the claim is NotNilpotent; the independent series
    // oracle must agree.
    return !cert.nilpotent && !vanishes;
}

} // namespace lieder
