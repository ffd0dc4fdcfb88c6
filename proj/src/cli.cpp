#include "splitoct/cli.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "splitoct/classify.hpp"
#include "splitoct/io.hpp"

namespace splitoct {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t below(std::uint64_t n) { return eng() % n; }

    Scalar scalar(const Field& f)
    {
        if (f.is_finite()) return Scalar(f, static_cast<std::int64_t>(below(
            static_cast<std::uint64_t>(f.modulus()))));
        const std::int64_t num = static_cast<std::int64_t>(below(201)) - 100;
        const std::int64_t den = 1 + static_cast<std::int64_t>(below(20));
        return Scalar(f, num, den);
    }

    Octonion octonion(const Field& f)
    {
        Octonion x(f);
        for (int i = 0; i < 8; ++i) x[i] = scalar(f);
        return x;
    }

    std::mt19937_64 eng;
};

struct Suite {
    Json findings = Json::array();
    Json counts = Json::object();
    bool all_pass = true;
    bool complete = true;
    std::uint64_t nodes = 0;

    void check(const std::string& name, bool pass, Json detail = nullptr)
    {
        Json f{{"name", name}, {"pass", pass}};
        if (!detail.is_null()) f["detail"] = std::move(detail);
        findings.push_back(std::move(f));
        all_pass = all_pass && pass;
    }

    void info(const std::string& name, Json detail)
    {
        findings.push_back(Json{{"name", name}, {"info", std::move(detail)}});
    }
};

Field config_field(const RunConfig& cfg)
{
    try {
        return Field::parse(cfg.field);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Scalar config_weight(const RunConfig& cfg, const Field& f, bool reject_zero)
{
    Scalar w = zero(f);
    try {
        w = Scalar::parse(f, cfg.weight);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (reject_zero && w.is_zero())
        throw UsageError("weight 0 is out of scope for classification commands "
                         "(zero-weight operators form a separate classification)");
    return w;
}

// ---------------------------------------------------------------- algebra --

void cmd_verify_algebra(const RunConfig& cfg, Suite& s, Rng& rng)
{
    const Field f = config_field(cfg);

    // composition law n(xy) = n(x) n(y)
    if (f.is_finite() && f.modulus() == 2) {
        std::uint64_t checked = 0, failed = 0;
        for (int a = 0; a < 256; ++a) {
            for (int b = 0; b < 256; ++b) {
                Octonion x(f), y(f);
                for (int i = 0; i < 8; ++i) {
                    x[i] = Scalar(f, (a >> i) & 1);
                    y[i] = Scalar(f, (b >> i) & 1);
                }
                if (norm(x * y) != norm(x) * norm(y)) ++failed;
                ++checked;
            }
        }
        s.nodes += checked;
        s.check("composition-law-exhaustive", failed == 0,
                Json{{"pairs", checked}, {"failures", failed}});
    } else {
        std::uint64_t failed = 0;
        for (std::uint64_t k = 0; k < cfg.random_pairs; ++k) {
            const Octonion x = rng.octonion(f), y = rng.octonion(f);
            if (norm(x * y) != norm(x) * norm(y)) ++failed;
        }
        s.nodes += cfg.random_pairs;
        s.check("composition-law-random", failed == 0,
                Json{{"pairs", cfg.random_pairs}, {"failures", failed}});
    }

    const Octonion u = Octonion::unit(f);
    bool unit_ok = true, alt_ok = true, conj_ok = true;
    for (int i = 0; i < 8; ++i) {
        const Octonion x = Octonion::basis(f, i);
        unit_ok = unit_ok && u * x == x && x * u == x;
        conj_ok = conj_ok && x + conjugate(x) == u.scaled(trace(x))
                          && x * conjugate(x) == u.scaled(norm(x));
        for (int j = 0; j < 8; ++j) {
            const Octonion y = Octonion::basis(f, j);
            alt_ok = alt_ok && x * (x * y) == (x * x) * y
                            && (y * x) * x == y * (x * x);
        }
    }
    s.check("unit-law-on-basis", unit_ok);
    s.check("alternativity-on-basis", alt_ok);
    s.check("conjugation-identities", conj_ok);

    // some triple must fail associativity
    std::string witness;
    for (int i = 0; i < 8 && witness.empty(); ++i)
        for (int j = 0; j < 8 && witness.empty(); ++j)
            for (int k = 0; k < 8 && witness.empty(); ++k) {
                const Octonion x = Octonion::basis(f, i), y = Octonion::basis(f, j),
                               z = Octonion::basis(f, k);
                if ((x * y) * z != x * (y * z))
                    witness = std::string(kBasisNames[i]) + "," + kBasisNames[j] + "," +
                              kBasisNames[k];
            }
    s.check("non-associativity-witness", !witness.empty(), Json{{"triple", witness}});

    // symplectic involution on random 2x2 matrices
    bool symp_ok = true;
    for (int t = 0; t < 64; ++t) {
        std::array<Scalar, 4> m{rng.scalar(f), rng.scalar(f), rng.scalar(f), rng.scalar(f)};
        const auto mb = symplectic_involution_2x2(m);
        symp_ok = symp_ok && symplectic_involution_2x2(mb) == m;
        const Scalar det = m[0] * m[3] - m[1] * m[2];
        // m * mbar = det * I
        symp_ok = symp_ok && m[0] * mb[0] + m[1] * mb[2] == det
                          && (m[0] * mb[1] + m[1] * mb[3]).is_zero()
                          && (m[2] * mb[0] + m[3] * mb[2]).is_zero()
                          && m[2] * mb[1] + m[3] * mb[3] == det;
    }
    s.check("symplectic-involution", symp_ok);

    if (f.characteristic() != 2) {
        LinearMap gram(f);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                gram.at(i, j) = bilinear_form(Octonion::basis(f, i), Octonion::basis(f, j));
        s.check("bilinear-form-nondegenerate", gram.rank() == 8, Json{{"rank", gram.rank()}});
    } else {
        s.info("bilinear-form-nondegenerate", "gated off in characteristic 2");
    }

    const Subspace o0 = trace_zero_subspace(f);
    s.check("trace-zero-subspace", o0.dim() == 7 &&
            o0.contains(Octonion::basis(f, E12)) && !o0.contains(Octonion::basis(f, E11)),
            Json{{"dim", o0.dim()}});
}

// -------------------------------------------------------------- morphisms --

std::vector<Scalar> alpha_sweep(const Field& f, bool nonzero)
{
    std::vector<Scalar> out;
    if (f.is_finite()) {
        for (const Scalar& a : enumerate_field(f))
            if (!(nonzero && a.is_zero())) out.push_back(a);
        return out;
    }
    if (!nonzero) out.push_back(zero(f));
    out.push_back(one(f));
    out.push_back(-one(f));
    out.push_back(Scalar(f, 2));
    out.push_back(Scalar(f, 1, 2));
    out.push_back(Scalar(f, -3, 2));
    return out;
}

void cmd_verify_morphisms(const RunConfig& cfg, Suite& s, Rng& rng)
{
    const Field f = config_field(cfg);
    const Octonion u = Octonion::unit(f);

    std::vector<Morphism> built;
    bool sweep_ok = true, unit_ok = true, norm_ok = true;
    Json kinds = Json::object();
    for (int k = 1; k <= 18; ++k) {
        if (k == 14) continue;
        std::vector<Morphism> members;
        const bool parametric = !(k == 9 || k == 11 || k == 17 || k == 18);
        const bool nonzero = (k == 7 || k == 12 || k == 13);
        if (parametric)
            for (const Scalar& a : alpha_sweep(f, nonzero))
                members.push_back(example_morphism(f, k, a));
        else
            members.push_back(example_morphism(f, k));

        const bool expect_anti = (k == 11 || k == 17);
        bool ok = true;
        for (const Morphism& m : members) {
            ok = ok && (expect_anti ? is_antiautomorphism(m.map) && !is_automorphism(m.map)
                                    : is_automorphism(m.map));
            unit_ok = unit_ok && m.map.apply(u) == u;
            for (int i = 0; i < 8; ++i)
                norm_ok = norm_ok && norm(m.map.column(i)) == norm(Octonion::basis(f, i));
        }
        kinds["family-" + std::to_string(k)] = expect_anti ? "anti" : "auto";
        sweep_ok = sweep_ok && ok;
        built.insert(built.end(), members.begin(), members.end());
        s.nodes += members.size();
    }
    s.check("family-sweep-kinds", sweep_ok, kinds);
    s.check("families-fix-unit", unit_ok);
    s.check("families-preserve-norm-on-basis", norm_ok);

    bool rand_norm_ok = true;
    for (int t = 0; t < 100 && !built.empty(); ++t) {
        const Morphism& m = built[rng.below(built.size())];
        const Octonion x = rng.octonion(f);
        rand_norm_ok = rand_norm_ok && norm(m.map.apply(x)) == norm(x);
    }
    s.check("families-preserve-norm-random", rand_norm_ok);

    const Morphism conj = canonical_involution(f);
    s.check("canonical-involution-anti",
            is_antiautomorphism(conj.map) && conj.map * conj.map == LinearMap::identity(f) &&
            conj.map.apply(u) == u);

    // family 2 and family 16 list the same images
    bool same_2_16 = true;
    for (const Scalar& a : alpha_sweep(f, false))
        same_2_16 = same_2_16 &&
            example_morphism(f, 2, a).map == example_morphism(f, 16, a).map;
    s.check("family-2-equals-family-16", same_2_16);

    s.check("family-9-has-order-4",
            example_morphism(f, 9).map.pow(4) == LinearMap::identity(f));

    // parameter composition laws
    bool comp_law = true;
    for (const Scalar& a : alpha_sweep(f, false))
        for (const Scalar& b : alpha_sweep(f, false)) {
            comp_law = comp_law &&
                example_morphism(f, 1, a).map * example_morphism(f, 1, b).map ==
                    example_morphism(f, 1, a + b).map;
            if (!a.is_zero() && !b.is_zero())
                comp_law = comp_law &&
                    example_morphism(f, 7, a).map * example_morphism(f, 7, b).map ==
                        example_morphism(f, 7, a * b).map;
        }
    s.check("parameter-composition-laws", comp_law);

    // composition parity on random pairs
    bool parity_ok = true;
    std::vector<Morphism> pool = built;
    pool.push_back(conj);
    for (int t = 0; t < 50; ++t) {
        const Morphism& a = pool[rng.below(pool.size())];
        const Morphism& b = pool[rng.below(pool.size())];
        const Morphism c = compose(a, b);
        parity_ok = parity_ok && (c.kind == MorphKind::Auto ? is_automorphism(c.map)
                                                            : is_antiautomorphism(c.map));
    }
    s.check("composition-parity", parity_ok);

    if (f.is_finite()) {
        const auto completions = complete_involution_14(f);
        bool post_ok = true;
        int autos = 0, antis = 0;
        for (const Morphism& m : completions) {
            post_ok = post_ok && m.map * m.map == LinearMap::identity(f) &&
                      m.map.apply(u) == u;
            (m.kind == MorphKind::Auto ? autos : antis) += 1;
        }
        s.check("family-14-completions-are-involutions", post_ok,
                Json{{"count", completions.size()}, {"auto", autos}, {"anti", antis}});
        s.counts["family_14_completions"] = completions.size();
        Json found = Json::array();
        for (const Morphism& m : completions) found.push_back(morphism_to_json(m));
        s.counts["family_14_morphisms"] = std::move(found);
    } else {
        s.info("family-14-completions", "finite fields only");
    }
}

// -------------------------------------------------------------- operators --

bool unit_image_is_scalar(const LinearMap& r)
{
    const Octonion r1 = r.apply(Octonion::unit(r.field()));
    for (int i = 0; i < 8; ++i)
        if (i != E11 && i != E22 && !r1[i].is_zero()) return false;
    return r1[E11] == r1[E22];
}

void cmd_verify_operators(const RunConfig& cfg, Suite& s, Rng&)
{
    const Field f = config_field(cfg);
    const Scalar w = config_weight(cfg, f, true);
    const Scalar w1 = one(f);
    const Catalog cat = catalog(f);

    std::vector<std::pair<std::string, RotaBaxterCandidate>> prop1_pool;
    prop1_pool.emplace_back("r1", r1(f));
    prop1_pool.emplace_back("r2", r2(f));

    for (auto& [name, cand] : prop1_pool) {
        auto chk = is_rota_baxter(cand.map, cand.weight);
        cand.verified = chk.holds ? Verified::Holds : Verified::Fails;
        s.check(name + "-rota-baxter-weight-1", chk.holds);
        s.check(name + "-non-splitting", !is_splitting(cand.map, cand.weight));
        const LinearMap pm = phi(cand.map, cand.weight);
        auto pchk = is_rota_baxter(pm, cand.weight);
        s.check("phi-" + name + "-rota-baxter", pchk.holds);
        s.check("phi-" + name + "-non-splitting", !is_splitting(pm, cand.weight));
        s.check("phi-involution-on-" + name, phi(pm, cand.weight) == cand.map);
    }

    s.check("r1-kernel-is-K4", r1(f).map.kernel() == cat.space("K4").carrier);
    s.check("r2-kernel-is-K3b", r2(f).map.kernel() == cat.space("K3b").carrier);
    s.check("r1-image-dim-4", r1(f).map.image().dim() == 4);
    s.check("r2-image-dim-5", r2(f).map.image().dim() == 5);

    {
        // the splitting defect of r1 shows up on the e22 column
        const LinearMap r = r1(f).map;
        const Octonion defect = (r * r + r).column(E22);
        s.check("r1-splitting-defect-at-e22", !defect.is_zero());
    }

    const LinearMap id = LinearMap::identity(f);
    s.check("identity-rota-baxter-weight-minus-1", is_rota_baxter(id, -w1).holds);
    if (w1 != -w1) {
        // at any other weight the identity fails, first on the (e11, e11) pair
        auto chk = is_rota_baxter(id, w1);
        const bool witness_ok = chk.witness && chk.witness->first == E11 &&
                                chk.witness->second == E11;
        s.check("identity-fails-at-weight-1", !chk.holds && witness_ok);
    } else {
        s.info("identity-fails-at-weight-1", "vacuous: 1 = -1 in characteristic 2");
    }

    const LinearMap zero_map(f);
    s.check("zero-map-rota-baxter", is_rota_baxter(zero_map, w).holds &&
            is_splitting(zero_map, w));
    {
        auto parts = splitting_parts(zero_map, w);
        s.check("zero-map-splitting-parts",
                parts.first.dim() == 0 && parts.second.dim() == 8);
    }
    s.check("phi-of-zero-is-minus-weight-id",
            phi(zero_map, w) == LinearMap::scalar(f, -w) &&
            is_rota_baxter(phi(zero_map, w), w).holds);

    bool r1_rejects = false;
    try {
        splitting_parts(r1(f).map, w1);
    } catch (const std::invalid_argument&) {
        r1_rejects = true;
    }
    s.check("splitting-parts-rejects-r1", r1_rejects);

    // weight scaling
    bool scale_ok = true;
    std::vector<Scalar> mus;
    if (f.is_finite())
        for (const Scalar& m : enumerate_field(f)) {
            if (!m.is_zero()) mus.push_back(m);
        }
    else
        mus = {Scalar(f, 2), Scalar(f, 3), -one(f), Scalar(f, 1, 2)};
    for (const Scalar& mu : mus) {
        auto [scaled, neww] = scale(r1(f).map, mu, w1);
        scale_ok = scale_ok && neww == mu && is_rota_baxter(scaled, neww).holds;
        auto [back, backw] = scale(scaled, mu.inverse(), neww);
        scale_ok = scale_ok && back == r1(f).map && backw == w1;
    }
    s.check("weight-scaling", scale_ok);

    // conjugation
    s.check("conjugate-by-identity", conjugate_operator(r1(f).map, id) == r1(f).map);
    {
        const Morphism m9 = example_morphism(f, 9);
        const LinearMap conj = conjugate_operator(r1(f).map, m9.map);
        s.check("conjugate-r1-by-family-9",
                is_rota_baxter(conj, w1).holds && !is_splitting(conj, w1));
        const Subspace k = r1(f).map.kernel();
        std::vector<Octonion> pre;
        const LinearMap minv = m9.map.inverse();
        for (const Octonion& v : k.basis()) pre.push_back(minv.apply(v));
        s.check("conjugate-kernel-is-preimage", conj.kernel() == Subspace(f, pre));
        prop1_pool.emplace_back("conj-r1-family-9", RotaBaxterCandidate{conj, w1});
        const Morphism ci = canonical_involution(f);
        const LinearMap aconj = conjugate_operator(r2(f).map, ci.map);
        s.check("conjugate-r2-by-canonical-involution",
                is_rota_baxter(aconj, w1).holds && !is_splitting(aconj, w1));
        prop1_pool.emplace_back("conj-r2-involution", RotaBaxterCandidate{aconj, w1});
    }

    bool prop1_ok = true;
    int prop1_applicable = 0;
    for (const auto& [name, cand] : prop1_pool) {
        if (!unit_image_is_scalar(cand.map)) continue;
        ++prop1_applicable;
        prop1_ok = prop1_ok && is_splitting(cand.map, cand.weight);
    }
    s.check("scalar-unit-image-implies-splitting", prop1_ok,
            Json{{"applicable", prop1_applicable}});
}

// ---------------------------------------------------------- decompositions --

void cmd_verify_decompositions(const RunConfig& cfg, Suite& s, Rng&)
{
    const Field f = config_field(cfg);
    const Scalar w = config_weight(cfg, f, true);
    const Catalog cat = catalog(f);
    const Catalog cat2 = catalog(Field::prime(2));

    // expected unit membership: D1..D6 have a unital left summand, D7 none
    bool direct_ok = true, rb_ok = true, round_ok = true, units_ok = true, prop1_ok = true;
    std::vector<std::string> fingerprints;
    Json per_pair = Json::object();
    for (const DecompositionPair& d : cat.decompositions) {
        const bool is_named_case = d.name[0] == 'D';
        direct_ok = direct_ok && is_direct_sum_decomposition(d.a1, d.a2);

        const LinearMap r = from_decomposition(d.a1, d.a2, w);
        const auto chk = is_rota_baxter(r, w);
        rb_ok = rb_ok && chk.holds && is_splitting(r, w);
        const auto parts = splitting_parts(r, w);
        round_ok = round_ok && parts.first == d.a1 && parts.second == d.a2 &&
                   from_decomposition(parts.first, parts.second, w) == r;

        if (unit_image_is_scalar(r))
            prop1_ok = prop1_ok && is_splitting(r, w);

        const bool u1 = contains_unit(d.a1), u2 = contains_unit(d.a2);
        if (is_named_case)
            units_ok = units_ok && u2 == false && u1 == (d.name != "D7");

        // distinctness fingerprint: dims, unit profile, square-zero basis
        // count over F2
        int sq_zero = 0;
        const DecompositionPair& d2 = cat2.decomposition(d.name);
        for (const Subspace* side : {&d2.a1, &d2.a2})
            for (const Octonion& b : side->basis())
                if ((b * b).is_zero()) ++sq_zero;
        std::ostringstream fp;
        fp << d.a1.dim() << "+" << d.a2.dim() << " units " << u1 << u2
           << " sq0 " << sq_zero;
        if (is_named_case) fingerprints.push_back(fp.str());
        per_pair[d.name] = fp.str();
    }
    s.check("catalog-pairs-direct-sum", direct_ok);
    s.check("catalog-operators-split", rb_ok);
    s.check("catalog-round-trip", round_ok);
    s.check("unit-membership-profile", units_ok, per_pair);
    s.check("scalar-unit-image-implies-splitting", prop1_ok);

    bool distinct = true;
    for (std::size_t i = 0; i < fingerprints.size(); ++i)
        for (std::size_t j = i + 1; j < fingerprints.size(); ++j)
            distinct = distinct && fingerprints[i] != fingerprints[j];
    s.check("case-fingerprints-distinct", distinct);

    s.counts["decomposition_cases"] =
        static_cast<int>(cat.decompositions.size()) - 1;  // E19p is the extra exhibit

    Json catalog_json = Json::array();
    for (const NamedSubspace& sp : cat.spaces)
        catalog_json.push_back(Json{{"name", sp.name},
                                    {"note", sp.note},
                                    {"dim", sp.carrier.dim()},
                                    {"basis", subspace_to_json(sp.carrier)["basis"]}});
    for (const DecompositionPair& d : cat.decompositions)
        catalog_json.push_back(Json{{"name", d.name},
                                    {"note", d.note},
                                    {"a1", subspace_to_json(d.a1)},
                                    {"a2", subspace_to_json(d.a2)}});
    s.counts["catalog"] = std::move(catalog_json);

    // the square-root-of--1 subalgebra E19p
    const DecompositionPair& e19 = cat.decomposition("E19p");
    s.check("E19p-direct-sum", is_direct_sum_decomposition(e19.a1, e19.a2) &&
            contains_unit(e19.a1) && !contains_unit(e19.a2));
    {
        Octonion x(f);
        x[E12] = one(f);
        x[E21] = -one(f);
        s.check("E19p-square-root-of-minus-one",
                x * x == -Octonion::unit(f) && e19.a1.contains(x));
    }
    if (f.is_finite()) {
        const auto hit = find_element_with_square(cat.space("C2").carrier,
                                                  -Octonion::unit(f));
        const bool minus_one_is_square = [&] {
            for (const Scalar& a : enumerate_field(f))
                if (a * a == -one(f)) return true;
            return false;
        }();
        s.check("C2-square-search-matches-quadratic-character",
                hit.has_value() == minus_one_is_square,
                Json{{"found", hit.has_value()},
                     {"element", hit ? hit->str() : "none"}});
    } else {
        s.info("C2-square-search", "finite fields only");
    }
}

// ----------------------------------------------------------------- audits --

void cmd_isotropic_audit(const RunConfig& cfg, Suite& s, Rng&)
{
    const Field f = config_field(cfg);
    if (!f.is_finite() || f.modulus() != 2)
        throw UsageError("isotropic-audit runs over F2 (use --field F2)");
    const IsotropicReport rep = isotropic_audit(f);
    s.nodes = rep.subspaces_checked;
    s.counts["subspaces_checked"] = rep.subspaces_checked;
    s.counts["isotropic_dim5"] = rep.isotropic_dim5;
    s.check("five-dim-subspace-count", rep.subspaces_checked == 97155,
            Json{{"count", rep.subspaces_checked}});
    s.check("no-totally-isotropic-dim5", rep.isotropic_dim5 == 0);
    Json basis = Json::array();
    for (const auto& v : rep.example_dim4) {
        std::string row;
        for (int i = 0; i < 8; ++i) row += char('0' + v[i]);
        basis.push_back(row);
    }
    s.check("totally-isotropic-dim4-witness", rep.example_verified, basis);
}

Json search_to_json(const SearchReport& rep, const Field& f)
{
    Json sols = Json::array();
    for (const auto& m : rep.solutions)
        sols.push_back(matrix_to_json(compact::from_compact(f, m))["rows"]);
    return Json{{"kernel", rep.kernel_name},
                {"splitting_count", rep.splitting_count},
                {"nonsplitting_count", rep.nonsplitting_count},
                {"solutions", std::move(sols)},
                {"nodes_visited", rep.nodes_visited},
                {"complete", rep.complete}};
}

void cmd_search_kernel(const RunConfig& cfg, Suite& s, Rng&)
{
    const Field f = config_field(cfg);
    if (!f.is_finite()) throw UsageError("search-kernel needs a finite field");
    if (cfg.kernel.empty()) throw UsageError("search-kernel needs --kernel {K4|K3a|K3b}");
    const Scalar w = config_weight(cfg, f, true);
    const Catalog cat = catalog(f);
    const NamedSubspace* kernel = nullptr;
    try {
        kernel = &cat.space(cfg.kernel);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    if (f.modulus() > 2)
        s.info("cost-warning", "kernel search over " + f.tag() +
               " enumerates p^8 images per column; expect long runtimes");

    const SearchReport rep = search_rb_with_kernel(*kernel, w, cfg.budget);
    s.nodes = rep.nodes_visited;
    s.complete = rep.complete;
    s.counts["solutions"] = rep.solutions.size();
    s.counts["splitting_count"] = rep.splitting_count;
    s.counts["nonsplitting_count"] = rep.nonsplitting_count;

    // independent re-verification of everything the search emitted
    bool verify_ok = true;
    for (const auto& sol : rep.solutions) {
        const LinearMap m = compact::from_compact(f, sol);
        verify_ok = verify_ok && is_rota_baxter(m, w).holds &&
                    m.kernel() == kernel->carrier;
    }
    s.check("solutions-reverify", verify_ok, Json{{"count", rep.solutions.size()}});

    bool unique_ok = true;
    for (std::size_t i = 0; i + 1 < rep.solutions.size() && unique_ok; ++i)
        for (std::size_t j = i + 1; j < rep.solutions.size() && unique_ok; ++j)
            unique_ok = rep.solutions[i] != rep.solutions[j];
    s.check("solutions-distinct", unique_ok);

    bool prop1_ok = true;
    for (const auto& sol : rep.solutions) {
        const LinearMap m = compact::from_compact(f, sol);
        if (unit_image_is_scalar(m))
            prop1_ok = prop1_ok && is_splitting(m, w);
    }
    s.check("scalar-unit-image-implies-splitting", prop1_ok);

    s.counts["search"] = search_to_json(rep, f);
}

void cmd_verify_theorem1(const RunConfig& cfg, Suite& s, Rng&)
{
    const Field f = config_field(cfg);
    if (!f.is_finite() || f.modulus() != 2)
        throw UsageError("verify-theorem1 runs over F2 (use --field F2)");

    const Theorem1Report rep = verify_theorem1_f2(cfg.budget, cfg.closure_cap);
    s.nodes = rep.k4.nodes_visited + rep.k3a.nodes_visited + rep.k3b.nodes_visited;
    s.complete = rep.complete;
    s.counts["closure_size"] = rep.closure_size;
    s.counts["closure_complete"] = rep.closure_complete;
    for (const SearchReport* sr : {&rep.k4, &rep.k3a, &rep.k3b})
        s.counts[sr->kernel_name] = Json{{"solutions", sr->solutions.size()},
                                         {"splitting_count", sr->splitting_count},
                                         {"nonsplitting_count", sr->nonsplitting_count},
                                         {"nodes_visited", sr->nodes_visited},
                                         {"complete", sr->complete}};

    s.check("K3a-yields-only-splitting", rep.k3a.nonsplitting_count == 0,
            Json{{"nonsplitting", rep.k3a.nonsplitting_count}});

    const compact::Mat8 r1c = compact::to_compact(r1(f).map);
    const compact::Mat8 r2c = compact::to_compact(r2(f).map);
    const bool r1_found =
        std::find(rep.k4.solutions.begin(), rep.k4.solutions.end(), r1c) !=
        rep.k4.solutions.end();
    const bool r2_found =
        std::find(rep.k3b.solutions.begin(), rep.k3b.solutions.end(), r2c) !=
        rep.k3b.solutions.end();
    s.check("K4-search-contains-r1", r1_found);
    s.check("K3b-search-contains-r2", r2_found);

    int orbit_matched = 0, fp_only = 0, unresolved = 0;
    Json verdicts = Json::array();
    for (const SolutionVerdict& v : rep.verdicts) {
        const char* name = "unresolved";
        switch (v.verdict) {
        case Verdict::OrbitMatched: ++orbit_matched; name = "orbit-matched"; break;
        case Verdict::FingerprintMatchedOnly: ++fp_only; name = "fingerprint-matched-only"; break;
        default: ++unresolved; break;
        }
        Json entry{{"kernel", v.kernel_name},
                   {"solution_index", v.solution_index},
                   {"verdict", name}};
        if (v.witness)
            entry["witness"] = Json{{"element_index", v.witness->element_index},
                                    {"mu", v.witness->mu},
                                    {"applied_phi", v.witness->applied_phi}};
        verdicts.push_back(std::move(entry));
    }
    s.counts["verdicts"] = Json{{"orbit_matched", orbit_matched},
                                {"fingerprint_matched_only", fp_only},
                                {"unresolved", unresolved}};
    s.counts["solution_verdicts"] = std::move(verdicts);
    s.check("no-unresolved-solutions", unresolved == 0);

    // fingerprint identities per kernel class
    const Fingerprint fp_r1 = gl_invariant_fingerprint(r1(f).map);
    const Fingerprint fp_r2 = gl_invariant_fingerprint(r2(f).map);
    bool k4_fp = true, k3b_fp = true;
    for (const SearchReport* sr : {&rep.k4, &rep.k3b}) {
        for (const auto& sol : sr->solutions) {
            if (compact::is_splitting(2, sol, 1)) continue;
            const Fingerprint fp = gl_invariant_fingerprint(compact::from_compact(f, sol));
            if (sr->kernel_name == "K4") k4_fp = k4_fp && fp == fp_r1;
            else k3b_fp = k3b_fp && fp == fp_r2;
        }
    }
    s.check("K4-nonsplitting-fingerprints-match-r1", k4_fp);
    s.check("K3b-nonsplitting-fingerprints-match-r2", k3b_fp);

    bool prop1_ok = true;
    for (const SearchReport* sr : {&rep.k4, &rep.k3a, &rep.k3b})
        for (const auto& sol : sr->solutions) {
            const LinearMap m = compact::from_compact(f, sol);
            if (unit_image_is_scalar(m)) prop1_ok = prop1_ok && is_splitting(m, one(f));
        }
    s.check("scalar-unit-image-implies-splitting", prop1_ok);
}

void cmd_orbit_equiv(const RunConfig& cfg, Suite& s, Rng&)
{
    if (cfg.files.size() != 2)
        throw UsageError("orbit-equiv needs two operator files");
    Json ja, jb;
    for (std::size_t i = 0; i < 2; ++i) {
        std::ifstream in(cfg.files[i]);
        if (!in) throw UsageError("cannot read operator file '" + cfg.files[i] + "'");
        try {
            (i == 0 ? ja : jb) = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw UsageError("bad JSON in '" + cfg.files[i] + "': " + e.what());
        }
    }
    RotaBaxterCandidate a = operator_from_json(ja), b = operator_from_json(jb);
    const Field f = a.map.field();
    if (b.map.field() != f)
        throw UsageError("operator files use different fields");
    if (f != config_field(cfg))
        throw UsageError("--field " + cfg.field + " does not match the operator files (" +
                         f.tag() + ")");
    if (!f.is_finite())
        throw UsageError("orbit search needs a finite field");
    if (a.weight.is_zero() || b.weight.is_zero())
        throw UsageError("weight 0 is out of scope for classification commands "
                         "(zero-weight operators form a separate classification)");

    s.check("left-operator-rota-baxter", is_rota_baxter(a.map, a.weight).holds);
    s.check("right-operator-rota-baxter", is_rota_baxter(b.map, b.weight).holds);
    if (!s.all_pass) return;

    const GroupClosure g = group_closure(all_example_morphisms(f), cfg.closure_cap);
    s.counts["closure_size"] = g.size();
    s.counts["closure_complete"] = g.complete;
    s.complete = g.complete;

    const auto witness = orbit_equivalent(a.map, b.map, g, true, true, a.weight, b.weight);
    if (witness) {
        const LinearMap m = compact::from_compact(f, g.elements[witness->element_index]);
        s.counts["witness"] = Json{{"element_index", witness->element_index},
                                   {"element", matrix_to_json(m)["rows"]},
                                   {"element_kind", g.anti[witness->element_index] ? "anti" : "auto"},
                                   {"mu", Scalar(f, witness->mu).str()},
                                   {"applied_phi", witness->applied_phi}};
        s.check("orbit-equivalent", true, Json{{"searched_elements", g.size()}});
    } else if (g.complete) {
        // the closure is the whole generated group: a definite negative
        s.check("orbit-equivalent", false, Json{{"searched_elements", g.size()}});
    } else {
        s.info("orbit-equivalent",
               "inconclusive: no witness within the capped closure");
    }
}

void cmd_group_closure(const RunConfig& cfg, Suite& s, Rng& rng)
{
    const Field f = config_field(cfg);
    if (!f.is_finite()) throw UsageError("group-closure needs a finite field");

    const auto gens = all_example_morphisms(f);
    const GroupClosure g = group_closure(gens, cfg.closure_cap);
    s.complete = g.complete;
    s.nodes = g.size();
    int antis = 0;
    for (std::uint8_t a : g.anti) antis += a;
    s.counts["generators"] = gens.size();
    s.counts["closure_size"] = g.size();
    s.counts["closure_complete"] = g.complete;
    s.counts["auto_count"] = g.size() - antis;
    s.counts["anti_count"] = antis;

    bool identity_ok = g.elements.at(0) == compact::identity();
    s.check("contains-identity", identity_ok);

    // every element preserves the unit and the norm
    bool preserve_ok = true;
    const std::int64_t p = g.p;
    compact::Vec8 unit{};
    unit[E11] = unit[E22] = 1;
    for (const auto& m : g.elements) {
        preserve_ok = preserve_ok && compact::apply(p, m, unit) == unit;
        for (int i = 0; i < 8 && preserve_ok; ++i) {
            compact::Vec8 x{};
            x[i] = 1;
            preserve_ok = compact::norm(p, compact::apply(p, m, x)) ==
                          compact::norm(p, x);
        }
    }
    s.check("elements-preserve-unit-and-basis-norms", preserve_ok);

    if (g.complete) {
        bool closed = true;
        std::unordered_map<std::string, std::size_t> keys;
        for (std::size_t i = 0; i < g.elements.size(); ++i)
            keys.emplace(std::string(reinterpret_cast<const char*>(g.elements[i].data()), 64), i);
        for (int t = 0; t < 10'000 && closed; ++t) {
            const auto& x = g.elements[rng.below(g.size())];
            const auto& y = g.elements[rng.below(g.size())];
            const auto xy = compact::compose(p, x, y);
            closed = keys.count(std::string(reinterpret_cast<const char*>(xy.data()), 64)) > 0;
        }
        s.check("closed-under-composition-spot-check", closed);
    } else {
        s.info("closed-under-composition-spot-check", "skipped: closure incomplete");
    }
}

} // namespace

RunResult run(const RunConfig& cfg)
{
    using Clock = std::chrono::steady_clock;
    const auto t0 = Clock::now();

    Suite s;
    Json report;
    report["task"] = cfg.command;

    RunResult result;
    try {
        const Field f = config_field(cfg);
        report["field"] = f.tag();
        Json params{{"weight", cfg.weight},
                    {"budget", cfg.budget},
                    {"seed", cfg.seed}};
        if (!cfg.kernel.empty()) params["kernel"] = cfg.kernel;
        if (!cfg.files.empty()) params["files"] = cfg.files;
        report["parameters"] = std::move(params);

        Rng rng(cfg.seed);
        if (cfg.command == "verify-algebra") cmd_verify_algebra(cfg, s, rng);
        else if (cfg.command == "verify-morphisms") cmd_verify_morphisms(cfg, s, rng);
        else if (cfg.command == "verify-operators") cmd_verify_operators(cfg, s, rng);
        else if (cfg.command == "verify-decompositions") cmd_verify_decompositions(cfg, s, rng);
        else if (cfg.command == "isotropic-audit") cmd_isotropic_audit(cfg, s, rng);
        else if (cfg.command == "search-kernel") cmd_search_kernel(cfg, s, rng);
        else if (cfg.command == "verify-theorem1") cmd_verify_theorem1(cfg, s, rng);
        else if (cfg.command == "orbit-equiv") cmd_orbit_equiv(cfg, s, rng);
        else if (cfg.command == "group-closure") cmd_group_closure(cfg, s, rng);
        else throw UsageError("unknown command '" + cfg.command + "'");
    } catch (const UsageError& e) {
        Json err{{"task", cfg.command}, {"error", e.what()}};
        return {2, err.dump(2) + "\n", std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        Json err{{"task", cfg.command}, {"error", e.what()}};
        return {2, err.dump(2) + "\n", std::string("error: ") + e.what() + "\n"};
    }

    report["findings"] = s.findings;
    report["counts"] = s.counts;
    report["nodes_visited"] = s.nodes;
    report["complete"] = s.complete;
    if (cfg.timing)
        report["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                Clock::now() - t0).count();

    std::ostringstream human;
    int passed = 0, failed = 0;
    for (const Json& f : report["findings"]) {
        if (!f.contains("pass")) continue;
        const bool pass = f["pass"].get<bool>();
        (pass ? passed : failed) += 1;
        human << (pass ? "PASS " : "FAIL ") << f["name"].get<std::string>() << "\n";
    }
    human << cfg.command << ": " << passed << " passed, " << failed << " failed"
          << (s.complete ? "" : " (incomplete: budget exhausted)") << "\n";

    result.exit_code = !s.all_pass ? 1 : (s.complete ? 0 : 3);
    result.report = report.dump(2) + "\n";
    result.summary = human.str();
    return result;
}

} // namespace splitoct
