/*
   Copyright 2026 The recip Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// recip: command-line front end.
//
// Exit codes: 0 the checked identity holds, 1 it fails, 2 usage or input error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recip/recip.hpp"
#include "recip/serialize.hpp"

namespace {

using namespace recip;

constexpr int ok = 0;
constexpr int violated = 1;
constexpr int bad_input = 2;

struct Common {
    std::uint64_t p = 0;
    std::uint64_t seed = default_seed;
    bool json = false;
    bool parallel = false;
};

Field prime_field(std::uint64_t p) {
    if (p >= max_characteristic) throw FieldError("p must be below 2^31");
    return Field::prime(p);
}

ClosedPoint parse_point(const std::string& src, const Field& k) {
    if (src == "inf" || src == "infinity") return ClosedPoint::infinity();
    Polynomial g = parse_polynomial(src, k);
    if (g.degree() < 1) throw PolynomialError("a closed point needs a generator of positive degree");
    if (!g.is_monic()) {
        std::cerr << "warning: rescaling point generator " << g.to_string() << " to be monic\n";
        g = g.monic();
    }
    return ClosedPoint::finite(g);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

void print_points(const ReciprocityReport& r) {
    const bool hilbert = r.law == "hilbert";
    std::size_t w = 16;
    for (const auto& p : r.points) w = std::max(w, p.point.to_string().size() + 2);
    std::cout << "  " << pad("point", w) << pad("deg", 5) << pad("v_f", 5) << pad("v_g", 5) << pad("commutator", 12)
              << pad("tame", 8) << (hilbert ? "hilbert" : "") << "\n";
    for (const auto& p : r.points) {
        std::cout << "  " << pad(p.point.to_string(), w) << pad(std::to_string(p.point.degree()), 5)
                  << pad(std::to_string(p.v_f), 5) << pad(std::to_string(p.v_g), 5)
                  << pad(p.commutator.to_string(), 12) << pad(p.tame.to_string(), 8)
                  << (hilbert ? p.value.to_string() : "") << "\n";
    }
    std::cout << "product = " << r.product << "\n" << (r.passed ? "passed" : "FAILED") << "\n";
}

int run_symbol(const Common& c, const std::string& fs, const std::string& gs, const std::string& pt) {
    const Field k = prime_field(c.p);
    const auto f = parse_rational(fs, k, c.seed);
    const auto g = parse_rational(gs, k, c.seed);
    const auto x = parse_point(pt, k);
    const auto r = local_symbol(f, g, x);
    if (c.json) {
        emit(to_json(r));
    } else {
        std::cout << "point " << x.to_string() << " of degree " << x.degree() << "\n"
                  << "v_f = " << r.v_f << ", v_g = " << r.v_g << "\n"
                  << "index_f = " << r.index_f << ", index_g = " << r.index_g << "\n"
                  << "commutator = " << r.commutator << "\n"
                  << "tame = " << r.tame << "\n";
    }
    return ok;
}

int run_weil(const Common& c, const std::string& fs, const std::string& gs) {
    const Field k = prime_field(c.p);
    const auto f = parse_rational(fs, k, c.seed);
    const auto g = parse_rational(gs, k, c.seed);
    const auto r = weil_check(f, g, c.parallel ? Execution::parallel : Execution::sequential);
    if (c.json) {
        emit(to_json(r));
    } else {
        std::cout << "f = " << f.to_string() << "\ng = " << g.to_string() << "\n";
        print_points(r);
    }
    return r.passed ? ok : violated;
}

int run_hilbert(const Common& c, std::uint64_t m, const std::string& fs, const std::string& gs) {
    const Field k = prime_field(c.p);
    const auto f = parse_rational(fs, k, c.seed);
    const auto g = parse_rational(gs, k, c.seed);
    const auto r = hilbert_check(f, g, m, c.parallel ? Execution::parallel : Execution::sequential);
    if (c.json) {
        emit(to_json(r));
    } else {
        std::cout << "f = " << f.to_string() << "\ng = " << g.to_string() << "\nm = " << m << "\n";
        print_points(r);
    }
    return r.passed ? ok : violated;
}

int run_charsum(const Common& c, std::uint64_t n, const std::string& fs) {
    const Field k = prime_field(c.p);
    const auto f = parse_rational(fs, k, c.seed);
    auto pts = f.support();
    if (pts.empty() || !pts.back().is_infinity()) pts.push_back(ClosedPoint::infinity());
    const auto total = character_check(f, n);
    if (c.json) {
        json per = json::array();
        for (const auto& x : pts) per.push_back({{"point", to_json(x)}, {"value", character_value(f, x, n)}});
        emit({{"n", n}, {"points", per}, {"sum", total}, {"passed", total == 0}});
    } else {
        for (const auto& x : pts) std::cout << "  " << pad(x.to_string(), 16) << character_value(f, x, n) << "\n";
        std::cout << "sum mod " << n << " = " << total << "\n";
    }
    return total == 0 ? ok : violated;
}

int run_degsum(const Common& c, const std::string& fs) {
    const Field k = prime_field(c.p);
    const auto f = parse_rational(fs, k, c.seed);
    const long s = f.degree_sum();
    if (c.json) {
        json per = json::array();
        for (const auto& x : f.support())
            per.push_back({{"point", to_json(x)}, {"degree", x.degree()}, {"valuation", f.valuation(x)}});
        emit({{"points", per}, {"degree_sum", s}, {"passed", s == 0}});
    } else {
        for (const auto& x : f.support())
            std::cout << "  " << pad(x.to_string(), 16) << "deg " << x.degree() << "  v " << f.valuation(x) << "\n";
        std::cout << "degree sum = " << s << "\n";
    }
    return s == 0 ? ok : violated;
}

int run_commutator(const Common& c, const std::string& fs, const std::string& gs, long shift, bool complement) {
    const Field k = prime_field(c.p);
    const auto f = parse_rational(fs, k, c.seed);
    const auto g = parse_rational(gs, k, c.seed);
    const auto r = complement ? complement_check(f, g) : commutator_check(f, g, shift);
    const std::string space = complement ? "t^-1 k[t^-1]" : "t^" + std::to_string(shift) + " k[[t]]";
    if (c.json) {
        json j = to_json(r);
        j["space"] = space;
        emit(j);
    } else {
        std::cout << "space  = " << space << "\n"
                  << "value  = " << r.value << "\n"
                  << "oracle = " << r.oracle << "\n"
                  << (r.match ? "match" : "MISMATCH") << "\n";
    }
    return r.match ? ok : violated;
}

void print_side(const GlkSide& s) {
    auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (const auto& x : v) out += (out.empty() ? "" : ",") + x;
        return "<" + out + ">";
    };
    std::cout << s.label << ": quotient " << join(s.sigma_quotient.incoming) << ", dual of "
              << join(s.sigma_quotient.outgoing) << "\n"
              << "  sigma~ tau~ = (sigma tau, " << s.sigma_tau << ")   expected " << s.expected_sigma_tau << "\n"
              << "  tau~ sigma~ = (tau sigma, " << s.tau_sigma << ")   expected " << s.expected_tau_sigma << "\n"
              << "  {sigma,tau} = " << s.commutator << "\n"
              << "  i(sigma) = " << s.index_sigma << ", i(tau) = " << s.index_tau << "\n";
}

int run_glk(const Common& c, std::int64_t a, std::int64_t b, std::int64_t lambda) {
    const Field k = prime_field(c.p);
    const auto ex = glk_example(k, a, b, lambda);
    if (c.json) {
        emit(to_json(ex));
    } else {
        std::cout << "a = " << ex.a << ", b = " << ex.b << ", lambda = " << ex.lambda << ", mu = " << ex.mu << "\n"
                  << "sigma = " << ex.sigma.to_string() << ", tau = " << ex.tau.to_string() << "\n";
        print_side(ex.odd);
        print_side(ex.even);
        std::cout << (ex.passed ? "passed" : "FAILED") << "\n";
    }
    return ex.passed ? ok : violated;
}

std::vector<MonomialSubspace> family_from_text(const std::string& source, long r, std::string& description) {
    auto rows_of = [&](const AffineRule& phi, long count) {
        description = phi.to_string();
        return admissible_family(phi, count);
    };
    if (source == "linear") {
        if (r < 1) throw SeqSpaceError("--r is required with phi=linear");
        return rows_of(AffineRule::linear(r), r);
    }
    if (source.rfind("linear:", 0) == 0) {
        const long m = std::stol(source.substr(7));
        return rows_of(AffineRule::linear(m), r > 0 ? r : m);
    }
    if (source.rfind("affine:", 0) == 0) {
        std::stringstream ss(source.substr(7));
        AffineRule phi;
        char c1 = 0, c2 = 0;
        if (!(ss >> phi.step >> c1 >> phi.row_coeff >> c2 >> phi.offset) || c1 != ',' || c2 != ',')
            throw SeqSpaceError("affine rule must look like affine:STEP,ROW,OFFSET");
        if (r < 1) throw SeqSpaceError("--r is required with an affine rule");
        return rows_of(phi, r);
    }
    std::ifstream in(source);
    if (!in) throw SeqSpaceError("cannot open family file " + source);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw SeqSpaceError(std::string("family file is not valid JSON: ") + e.what());
    }
    if (j.is_object() && !j.contains("family")) throw SeqSpaceError("family file object needs a \"family\" key");
    const json& list = j.is_object() ? j["family"] : j;
    if (!list.is_array()) throw SeqSpaceError("family file must hold a list of index sets");
    std::vector<MonomialSubspace> fam;
    for (const auto& item : list) {
        if (r > 0 && static_cast<long>(fam.size()) == r) break;
        fam.emplace_back(periodic_set_from_json(item));
    }
    description = "family from " + source;
    check_admissible(fam);
    return fam;
}

BlockOperator operator_from_text(const std::string& text, const Field& k) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception&) {
        throw SeqSpaceError("--op must be a JSON matrix such as [[0,3],[2,0]]");
    }
    try {
        return BlockOperator(Matrix::from_ints(k, j.get<std::vector<std::vector<std::int64_t>>>()));
    } catch (const json::exception&) {
        throw SeqSpaceError("--op must be a square matrix of integers");
    }
}

BlockOperator random_operator(const Field& k, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        Matrix m(k, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = detail::random_element(k, rng);
        if (m.is_invertible()) return BlockOperator(m);
    }
}

int run_family(const Common& c, const std::string& source, long r, const std::string& op_text) {
    const Field k = prime_field(c.p);
    std::string description;
    const auto fam = family_from_text(source, r, description);
    const BlockOperator op = op_text.empty() ? random_operator(k, 4, c.seed) : operator_from_text(op_text, k);
    if (op.matrix().rows() == 0) throw SeqSpaceError("--op must be nonempty");
    const auto rep = index_additivity_check(op, fam);
    if (c.json) {
        json members = json::array();
        for (std::size_t i = 0; i < fam.size(); ++i)
            members.push_back({{"set", to_json(fam[i].index_set())}, {"index", rep.part_indices[i]}});
        emit({{"rule", description},
              {"operator", op.to_string()},
              {"admissible", true},
              {"family", members},
              {"index_of_sum", rep.sum_index},
              {"index_sum", rep.total},
              {"passed", rep.passed}});
    } else {
        std::cout << description << "\noperator " << op.to_string() << "\nadmissible\n";
        for (std::size_t i = 0; i < fam.size(); ++i)
            std::cout << "  V_" << i + 1 << " = " << fam[i].index_set().to_string() << "   i = " << rep.part_indices[i]
                      << "\n";
        std::cout << "index of the sum = " << rep.sum_index << "\nsum of indices = " << rep.total << "\n"
                  << (rep.passed ? "passed" : "FAILED") << "\n";
    }
    return rep.passed ? ok : violated;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local symbols and reciprocity laws on the projective line over F_p"};
    app.require_subcommand(1);
    Common c;
    std::string f, g, point = "inf", phi, op;
    std::uint64_t m = 0, n = 0;
    long shift = 0, r = 0;
    bool complement = false;
    std::int64_t a = 0, b = 0, lambda = 0;

    auto common = [&](CLI::App* s) {
        s->add_option("--p", c.p, "prime characteristic")->required();
        s->add_option("--seed", c.seed, "seed for polynomial factorization");
        s->add_flag("--json", c.json, "JSON output");
        s->add_flag("--parallel", c.parallel, "evaluate local symbols concurrently");
    };
    auto fg = [&](CLI::App* s, bool need_g) {
        s->add_option("--f", f, "rational function of t")->required();
        if (need_g) s->add_option("--g", g, "rational function of t")->required();
    };

    auto* symbol = app.add_subcommand("symbol", "local symbols at one closed point");
    common(symbol);
    fg(symbol, true);
    symbol->add_option("--point", point, "monic irreducible generator, or inf")->required();

    auto* weil = app.add_subcommand("weil", "product of tame symbols over all points");
    common(weil);
    fg(weil, true);

    auto* hilbert = app.add_subcommand("hilbert", "product of Hilbert symbols in mu_m");
    common(hilbert);
    fg(hilbert, true);
    hilbert->add_option("--m", m, "order of the roots of unity; must divide p-1")->required();

    auto* charsum = app.add_subcommand("charsum", "sum of character exponents mod n");
    common(charsum);
    fg(charsum, false);
    charsum->add_option("--n", n, "character order")->required()->check(CLI::PositiveNumber);

    auto* degsum = app.add_subcommand("degsum", "sum of deg(x) v_x(f)");
    common(degsum);
    fg(degsum, false);

    auto* comm = app.add_subcommand("commutator", "determinant-line commutator of multiplication operators");
    common(comm);
    fg(comm, true);
    comm->add_option("--shift", shift, "use t^A k[[t]] as the reference space");
    comm->add_flag("--complement", complement, "use t^-1 k[t^-1] as the reference space");

    auto* glk = app.add_subcommand("glk-example", "2x2 antidiagonal block commutators over odd and even coordinates");
    common(glk);
    glk->add_option("--a", a)->required();
    glk->add_option("--b", b)->required();
    glk->add_option("--lambda", lambda)->required();

    auto* family = app.add_subcommand("family-check", "admissibility and index sum of a family of subspaces");
    common(family);
    family->add_option("--phi", phi, "linear, linear:R, affine:STEP,ROW,OFFSET or a JSON file")->required();
    family->add_option("--r", r, "number of members");
    family->add_option("--op", op, "block matrix, e.g. [[0,3],[2,0]]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : bad_input;
    }

    try {
        if (*symbol) return run_symbol(c, f, g, point);
        if (*weil) return run_weil(c, f, g);
        if (*hilbert) return run_hilbert(c, m, f, g);
        if (*charsum) return run_charsum(c, n, f);
        if (*degsum) return run_degsum(c, f);
        if (*comm) {
            if (complement && shift != 0) throw DetLineError("--shift and --complement are exclusive");
            return run_commutator(c, f, g, shift, complement);
        }
        if (*glk) return run_glk(c, a, b, lambda);
        if (*family) return run_family(c, phi, r, op);
    } catch (const ParseError& e) {
        std::cerr << "error: parse error " << e.what() << "\n";
        return bad_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: value out of range: " << e.what() << "\n";
        return bad_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return violated;
    }
    return bad_input;
}
