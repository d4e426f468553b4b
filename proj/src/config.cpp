#include "novpot/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace novpot {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
    throw config_error(path + ": " + msg);
}

const json& field(const json& j, const std::string& path, const std::string& key) {
    if (!j.is_object())
        bad(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        bad(path, "missing required key '" + key + "'");
    return *it;
}

Rational rational_at(const json& j, const std::string& path) {
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string()) {
        auto r = Rational::try_parse(j.get<std::string>());
        if (!r)
            bad(path, "invalid rational literal '" + j.get<std::string>() + "'");
        return *r;
    }
    bad(path, "expected a rational as \"p/q\" string or integer");
}

Int int_at(const json& j, const std::string& path) {
    if (!j.is_number_integer())
        bad(path, "expected an integer");
    return j.get<Int>();
}

std::vector<Int> int_vector_at(const json& j, const std::string& path, std::size_t len) {
    if (!j.is_array())
        bad(path, "expected an array of integers");
    std::vector<Int> v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(int_at(j[i], path + "[" + std::to_string(i) + "]"));
    if (len && v.size() != len)
        bad(path, "expected " + std::to_string(len) + " entries, got " +
                      std::to_string(v.size()));
    return v;
}

AffineExponent affine_at(const json& j, const std::string& path, unsigned dim) {
    AffineExponent a;
    a.constant = rational_at(field(j, path, "constant"), path + ".constant");
    const json& g = field(j, path, "gradient");
    if (!g.is_array() || g.size() != dim)
        bad(path + ".gradient", "expected " + std::to_string(dim) + " rationals");
    for (std::size_t i = 0; i < g.size(); ++i)
        a.gradient.push_back(rational_at(g[i], path + ".gradient[" + std::to_string(i) + "]"));
    return a;
}

void parse_lattice(const json& j, const std::string& path, unsigned fiber_dim,
                   ClassLattice& lat) {
    lat.name = field(j, path, "name").get<std::string>();
    lat.fiber_dim = fiber_dim;
    const json& basis = field(j, path, "basis");
    if (!basis.is_array() || basis.empty())
        bad(path + ".basis", "expected a non-empty array of labels");
    std::vector<std::string> b;
    for (const auto& x : basis)
        b.push_back(x.get<std::string>());
    lat.set_basis(std::move(b));

    if (j.contains("relations")) {
        for (const auto& [label, rel] : j.at("relations").items()) {
            std::vector<Int> coords(lat.basis_size(), 0);
            for (const auto& [bl, mult] : rel.items()) {
                auto it = std::find(lat.basis().begin(), lat.basis().end(), bl);
                if (it == lat.basis().end())
                    bad(path + ".relations." + label, "unknown basis label '" + bl + "'");
                coords[static_cast<std::size_t>(it - lat.basis().begin())] =
                    int_at(mult, path + ".relations." + label + "." + bl);
            }
            lat.add_generator(label, std::move(coords));
        }
    }
    if (j.contains("pairings")) {
        for (const auto& [divisor, row] : j.at("pairings").items()) {
            std::map<std::string, Int> r;
            for (const auto& [bl, v] : row.items())
                r[bl] = int_at(v, path + ".pairings." + divisor + "." + bl);
            lat.set_pairing_row(divisor, std::move(r));
        }
    }
    if (j.contains("functionals")) {
        const json& fn = j.at("functionals");
        std::string fpath = path + ".functionals";
        if (fn.contains("chern"))
            for (const auto& [bl, v] : fn.at("chern").items())
                lat.seed_chern(bl, int_at(v, fpath + ".chern." + bl));
        if (fn.contains("boundary"))
            for (const auto& [bl, v] : fn.at("boundary").items())
                lat.seed_boundary(bl, int_vector_at(v, fpath + ".boundary." + bl, fiber_dim));
        if (fn.contains("area"))
            for (const auto& [bl, v] : fn.at("area").items())
                lat.seed_area(bl, affine_at(v, fpath + ".area." + bl, fiber_dim));
        for (const auto& [key, v] : fn.items()) {
            (void)v;
            if (key != "chern" && key != "boundary" && key != "area")
                bad(fpath, "unknown functional '" + key + "'");
        }
    }
}

GluingTerm gluing_term_at(const json& j, const std::string& path) {
    GluingTerm t;
    t.lattice = field(j, path, "lattice").get<std::string>();
    t.cls = field(j, path, "class").get<std::string>();
    t.mult = j.contains("mult") ? int_at(j.at("mult"), path + ".mult") : 1;
    if (t.mult == 0)
        bad(path + ".mult", "multiplicity must be nonzero");
    return t;
}

}  // namespace

std::vector<Novikov> DocumentConfig::resolve_qh_roots() const {
    if (!qh_ring)
        throw config_error("configuration has no qh_ring section");
    switch (qh_root_mode) {
        case QHRootMode::given:
            return qh_roots;
        case QHRootMode::binomial: {
            const auto& f = qh_ring->f;
            for (std::size_t i = 1; i + 1 < f.size(); ++i)
                if (!f[i].is_zero())
                    throw config_error(
                        "qh_ring.roots = \"binomial\" requires z^d + c with no middle terms");
            return (-f[0]).kth_roots(qh_ring->degree());
        }
        case QHRootMode::none:
            break;
    }
    throw config_error("qh_ring section supplies no roots");
}

DocumentConfig parse_config(const std::string& text, const std::string& source_name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Recover the line number from the byte offset for the message.
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n')
                ++line;
        throw config_error(source_name + ":" + std::to_string(line) + ": " + e.what());
    }

    DocumentConfig c;
    if (j.contains("name"))
        c.name = j.at("name").get<std::string>();

    const json& cf = field(j, "", "coefficient_field");
    c.cyclotomic_order = static_cast<unsigned>(
        int_at(field(cf, "coefficient_field", "cyclotomic_order"),
               "coefficient_field.cyclotomic_order"));
    if (c.cyclotomic_order == 0)
        bad("coefficient_field.cyclotomic_order", "must be positive");

    c.fiber_dimension = static_cast<unsigned>(
        int_at(field(j, "", "fiber_dimension"), "fiber_dimension"));

    const json& pj = field(j, "", "polytope");
    c.polytope.dimension = static_cast<unsigned>(
        int_at(field(pj, "polytope", "dimension"), "polytope.dimension"));
    if (c.polytope.dimension != c.fiber_dimension)
        bad("polytope.dimension", "must equal fiber_dimension");
    c.polytope.compact_asserted =
        pj.contains("compact") && pj.at("compact").get<bool>();
    const json& facets = field(pj, "polytope", "facets");
    if (!facets.is_array() || facets.empty())
        bad("polytope.facets", "expected a non-empty array");
    for (std::size_t i = 0; i < facets.size(); ++i) {
        std::string fpath = "polytope.facets[" + std::to_string(i) + "]";
        Facet f;
        if (facets[i].contains("name"))
            f.name = facets[i].at("name").get<std::string>();
        f.normal = int_vector_at(field(facets[i], fpath, "normal"), fpath + ".normal",
                                 c.polytope.dimension);
        f.offset = rational_at(field(facets[i], fpath, "offset"), fpath + ".offset");
        c.polytope.facets.push_back(std::move(f));
    }
    c.polytope.validate();

    if (j.contains("toric_counts")) {
        c.toric_counts = int_vector_at(j.at("toric_counts"), "toric_counts",
                                       c.polytope.facets.size());
        for (Int n : c.toric_counts)
            if (n < 1)
                bad("toric_counts", "counts must be >= 1");
    }

    if (j.contains("extra_terms")) {
        const json& ets = j.at("extra_terms");
        for (std::size_t i = 0; i < ets.size(); ++i) {
            std::string epath = "extra_terms[" + std::to_string(i) + "]";
            PotentialTerm t;
            t.count = int_at(field(ets[i], epath, "count"), epath + ".count");
            if (t.count < 1)
                bad(epath + ".count", "count must be >= 1");
            if (ets[i].contains("coefficient")) {
                Novikov lit = Novikov::parse(ets[i].at("coefficient").get<std::string>(),
                                             c.cyclotomic_order);
                if (lit.is_zero() || !lit.is_monomial() ||
                    !lit.single_term().exp.is_zero())
                    bad(epath + ".coefficient",
                        "expected a nonzero T-free coefficient literal");
                t.coefficient = lit.single_term().coeff;
            } else {
                t.coefficient = Cyclotomic::one(c.cyclotomic_order);
            }
            t.monomial = int_vector_at(field(ets[i], epath, "monomial"), epath + ".monomial",
                                       c.fiber_dimension);
            t.exponent = affine_at(field(ets[i], epath, "exponent"), epath + ".exponent",
                                   c.fiber_dimension);
            c.extra_terms.push_back(std::move(t));
            c.extra_term_names.push_back(
                ets[i].contains("name") ? ets[i].at("name").get<std::string>() : "");
        }
    }

    if (j.contains("fiber_point")) {
        const json& fp = j.at("fiber_point");
        if (!fp.is_array() || fp.size() != c.fiber_dimension)
            bad("fiber_point", "expected " + std::to_string(c.fiber_dimension) + " rationals");
        FiberPoint u;
        for (std::size_t i = 0; i < fp.size(); ++i)
            u.push_back(rational_at(fp[i], "fiber_point[" + std::to_string(i) + "]"));
        c.fiber_point = std::move(u);
    }

    if (j.contains("class_lattices")) {
        const json& cl = j.at("class_lattices");
        const json& ls = field(cl, "class_lattices", "lattices");
        for (std::size_t i = 0; i < ls.size(); ++i) {
            ClassLattice lat;
            parse_lattice(ls[i], "class_lattices.lattices[" + std::to_string(i) + "]",
                          c.fiber_dimension, lat);
            if (c.lattices.count(lat.name))
                bad("class_lattices", "duplicate lattice name '" + lat.name + "'");
            c.lattices.emplace(lat.name, std::move(lat));
        }
        if (cl.contains("gluing_rules")) {
            const json& rules = cl.at("gluing_rules");
            for (std::size_t i = 0; i < rules.size(); ++i) {
                std::string rpath = "class_lattices.gluing_rules[" + std::to_string(i) + "]";
                GluingRule r;
                r.name = field(rules[i], rpath, "name").get<std::string>();
                const json& pieces = field(rules[i], rpath, "pieces");
                for (std::size_t k = 0; k < pieces.size(); ++k)
                    r.pieces.push_back(
                        gluing_term_at(pieces[k], rpath + ".pieces[" + std::to_string(k) + "]"));
                if (r.pieces.empty())
                    bad(rpath + ".pieces", "expected at least one piece");
                r.result = gluing_term_at(field(rules[i], rpath, "result"), rpath + ".result");
                // Cross-references must resolve now, not at use time.
                for (const auto& t : r.pieces) {
                    auto it = c.lattices.find(t.lattice);
                    if (it == c.lattices.end())
                        bad(rpath, "unknown lattice '" + t.lattice + "'");
                    if (!it->second.has_generator(t.cls))
                        bad(rpath, "unknown class '" + t.cls + "' in lattice '" + t.lattice + "'");
                }
                auto it = c.lattices.find(r.result.lattice);
                if (it == c.lattices.end())
                    bad(rpath + ".result", "unknown lattice '" + r.result.lattice + "'");
                if (!it->second.has_generator(r.result.cls))
                    bad(rpath + ".result", "unknown class '" + r.result.cls + "'");
                c.gluing_rules.push_back(std::move(r));
            }
        }
    }

    if (j.contains("index_checks")) {
        const json& ics = j.at("index_checks");
        for (std::size_t i = 0; i < ics.size(); ++i) {
            std::string ipath = "index_checks[" + std::to_string(i) + "]";
            IndexCheckConfig ic;
            ic.name = field(ics[i], ipath, "name").get<std::string>();
            ic.n = int_at(field(ics[i], ipath, "n"), ipath + ".n");
            ic.genus = int_at(field(ics[i], ipath, "genus"), ipath + ".genus");
            ic.chi = int_at(field(ics[i], ipath, "chi"), ipath + ".chi");
            ic.c1 = int_at(field(ics[i], ipath, "c1"), ipath + ".c1");
            ic.gamma0 = int_at(field(ics[i], ipath, "gamma0"), ipath + ".gamma0");
            ic.boundary_components = int_at(field(ics[i], ipath, "boundary_components"),
                                            ipath + ".boundary_components");
            ic.z_du = int_at(field(ics[i], ipath, "z_du"), ipath + ".z_du");
            const json& ps = field(ics[i], ipath, "punctures");
            for (std::size_t k = 0; k < ps.size(); ++k) {
                std::string ppath = ipath + ".punctures[" + std::to_string(k) + "]";
                IndexPuncture p;
                p.sign = static_cast<int>(int_at(field(ps[k], ppath, "sign"), ppath + ".sign"));
                if (p.sign != 1 && p.sign != -1)
                    bad(ppath + ".sign", "must be +1 or -1");
                p.mu_cz = int_at(field(ps[k], ppath, "mu_cz"), ppath + ".mu_cz");
                p.dim_n = int_at(field(ps[k], ppath, "dim_n"), ppath + ".dim_n");
                ic.punctures.push_back(p);
            }
            c.index_checks.push_back(std::move(ic));
        }
    }

    if (j.contains("qh_ring")) {
        const json& q = j.at("qh_ring");
        QHRing ring;
        ring.order = c.cyclotomic_order;
        const json& coeffs = field(q, "qh_ring", "coefficients");
        if (!coeffs.is_array() || coeffs.size() < 2)
            bad("qh_ring.coefficients", "expected at least two coefficients");
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            std::string cpath = "qh_ring.coefficients[" + std::to_string(i) + "]";
            if (coeffs[i].is_string())
                ring.f.push_back(Novikov::parse(coeffs[i].get<std::string>(),
                                                c.cyclotomic_order));
            else if (coeffs[i].is_number_integer())
                ring.f.push_back(Novikov::rational(c.cyclotomic_order,
                                                   Rational(coeffs[i].get<long long>())));
            else
                bad(cpath, "expected an element literal or integer");
        }
        ring.validate();
        c.qh_ring = std::move(ring);
        if (q.contains("roots")) {
            const json& roots = q.at("roots");
            if (roots.is_string() && roots.get<std::string>() == "binomial") {
                c.qh_root_mode = QHRootMode::binomial;
            } else if (roots.is_array()) {
                c.qh_root_mode = QHRootMode::given;
                for (std::size_t i = 0; i < roots.size(); ++i)
                    c.qh_roots.push_back(Novikov::parse(roots[i].get<std::string>(),
                                                        c.cyclotomic_order));
                if (c.qh_roots.size() != c.qh_ring->degree())
                    bad("qh_ring.roots", "expected one root per degree");
            } else {
                bad("qh_ring.roots", "expected \"binomial\" or an array of element literals");
            }
        }
    }

    // Extra-term coefficients and monomials already checked; make sure the
    // potential assembles.
    c.build();
    return c;
}

DocumentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw config_error("cannot open configuration file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

}  // namespace novpot
