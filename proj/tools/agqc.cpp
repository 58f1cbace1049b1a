/*
   Copyright 2026 The agqc Authors

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

// agqc: command-line front end.
//
//   agqc points --family gk --q 2
//   agqc swiss --family ggk2 --q 2 --n 3
//   agqc code --family abq --q 2 --n 3 --s 5 --min-weight exact
//   agqc quantum-table --family gk --q 2 --verify
//   agqc gv-check --alphabet 4096 --N 62464 --k 50582 --d 5486
//
// Exit status: 0 when every requested check passed, 1 when a check failed,
// 2 on bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "agqc/point_cache.hpp"
#include "agqc/parallel.hpp"
#include "agqc/report.hpp"

namespace {

using namespace agqc;

struct Options {
    std::string family;
    long q = 2;
    int n = 0;
    std::optional<long> s;
    std::optional<long> s_min;
    std::optional<long> s_max;
    std::string format = "json";
    std::optional<std::string> cache_dir;
    std::optional<std::string> moduli;
    unsigned jobs = 0;
    bool slow = false;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t samples = kDefaultSamples;
    bool verify = false;
    bool gv = false;
    bool gv_cross_check = false;
    std::string min_weight;
    bool dual = false;
    std::optional<std::string> input;
    std::uint64_t alphabet = 0;
    long N = 0, k = 0, d = 0;
};

struct Instance {
    CurveDescriptor desc;
    FieldPtr field;
};

ModuliTable moduli(const Options& o) { return o.moduli ? ModuliTable::load(*o.moduli) : ModuliTable::builtin(); }

unsigned jobs(const Options& o) { return o.jobs ? o.jobs : default_jobs(); }

void require_slow(const CurveDescriptor& desc, const Options& o) {
    if (desc.field_size() >= 1024 && !o.slow) {
        throw std::invalid_argument(desc.label() + " lives over GF(" + std::to_string(desc.field_size()) +
                                    "); pass --slow to build it");
    }
}

Instance instance(const Options& o, bool build) {
    if (o.family.empty()) throw std::invalid_argument("--family is required");
    Instance in;
    auto table = moduli(o);
    in.desc = make_descriptor(parse_family(o.family), o.q, o.n, table);
    if (build) {
        require_slow(in.desc, o);
        in.field = build_field(in.desc.field);
    }
    return in;
}

std::vector<AffinePlace> places(const Instance& in, const Options& o) {
    auto dir = cache_dir(o.cache_dir);
    auto got = load_or_enumerate(in.desc, *in.field, dir, jobs(o));
    std::cerr << "cache: ";
    switch (got.status) {
        case CacheStatus::kHit: std::cerr << "hit"; break;
        case CacheStatus::kMiss: std::cerr << "miss, written"; break;
        case CacheStatus::kCorrupt: std::cerr << "corrupt (" << got.reason << "), rewritten"; break;
    }
    std::cerr << " " << cache_file(dir, in.desc, *in.field).string() << "\n";
    return std::move(got.places);
}

long require_s(const Options& o) {
    if (!o.s) throw std::invalid_argument("--s is required");
    if (*o.s < 0) throw std::invalid_argument("s must be nonnegative");
    return *o.s;
}

int cmd_points(const Options& o) {
    auto in = instance(o, true);
    auto pl = places(in, o);
    std::cout << points_report(in.desc, pl);
    return maximality_check(in.desc, pl.size()).maximal ? 0 : 1;
}

int cmd_swiss(const Options& o) {
    auto in = instance(o, true);
    auto pl = places(in, o);
    auto sw = build_swiss_data(in.desc, in.field, pl);
    std::cout << swiss_report(sw, pl);
    return closed_form_check(sw).ok && simple_zero_certificate(sw, pl).ok ? 0 : 1;
}

int cmd_basis(const Options& o) {
    auto in = instance(o, true);
    auto pl = places(in, o);
    auto sw = build_swiss_data(in.desc, in.field, pl);
    auto sel = select_basis(in.desc, in.field, divisor_for(in.desc, require_s(o)), sw.d_places);
    std::cout << (o.format == "matrix" ? matrix_text(sel.generator) : basis_report(in.desc, sel));
    return 0;
}

std::optional<WeightMode> weight_mode(const Options& o) {
    if (o.min_weight.empty()) return std::nullopt;
    if (o.min_weight == "exact") return WeightMode::kExact;
    if (o.min_weight == "sampled") return WeightMode::kSampled;
    throw std::invalid_argument("--min-weight takes exact or sampled");
}

int cmd_code_file(const Options& o) {
    std::ifstream f(*o.input);
    if (!f) throw std::invalid_argument("cannot open " + *o.input);
    Matrix g = read_matrix(f, moduli(o));
    if (o.format == "matrix") {
        std::cout << matrix_text(o.dual ? dual_code(g) : g);
        return 0;
    }
    std::optional<WeightResult> w;
    if (auto mode = weight_mode(o)) w = min_weight(g, *mode, o.seed, o.samples);
    std::cout << matrix_report(g, is_self_orthogonal(g, jobs(o)), w);
    return 0;
}

int cmd_code(const Options& o) {
    if (o.input) return cmd_code_file(o);
    auto in = instance(o, true);
    auto pl = places(in, o);
    auto sw = build_swiss_data(in.desc, in.field, pl);
    auto code = build_code(sw, divisor_for(in.desc, require_s(o)));
    if (o.format == "matrix") {
        std::cout << matrix_text(o.dual ? dual_code(code.generator) : code.generator);
        return 0;
    }
    CodeSummary c{&sw, &code, is_self_orthogonal(code, jobs(o)), std::nullopt, std::nullopt};
    if (in.desc.infinity.count == 1) c.witnesses = dual_membership_witnesses(sw, code.divisor);
    if (auto mode = weight_mode(o)) c.weight = min_weight(code, *mode, o.seed, o.samples);
    std::cout << code_report(c);
    return !c.witnesses || c.witnesses->ok ? 0 : 1;
}

int cmd_quantum_table(const Options& o) {
    auto in = instance(o, false);
    TableOptions t;
    t.s_lo = o.s_min;
    t.s_hi = o.s_max;
    t.gv = o.gv;
    t.gv_cross_check = o.gv_cross_check;
    t.jobs = jobs(o);
    if (o.s_min && *o.s_min < 0) throw std::invalid_argument("s must be nonnegative");
    if (o.gv && in.desc.family == Family::GK && !o.s_min) {
        t.s_lo = gv_corollary_start(in.desc.q);
        if (*t.s_lo > theorem_range(in.desc).second) {
            std::cerr << "note: the GV corollary regime starts at s = " << *t.s_lo << ", beyond s_max = "
                      << theorem_range(in.desc).second << "; it is empty for q = " << in.desc.q << "\n";
        }
    }
    for (const auto& note : table_notes(in.desc)) std::cerr << note << "\n";
    auto rows = theorem_table(in.desc, t);

    std::vector<RowMismatch> failures;
    if (o.verify && !rows.empty()) {
        if (in.desc.field_size() > 1024) throw std::invalid_argument("--verify is limited to fields of size <= 1024");
        require_slow(in.desc, o);
        Instance b = instance(o, true);
        auto pl = places(b, o);
        auto sw = build_swiss_data(b.desc, b.field, pl);
        failures = verify_table(sw, rows, jobs(o));
    }
    if (o.gv && o.gv_cross_check) {
        for (const auto& r : rows) {
            if (r.params.gv && r.params.gv->full_sum_agrees && !*r.params.gv->full_sum_agrees) {
                failures.push_back({r.s, "dominant-term verdict disagrees with the full sum"});
            }
        }
    }
    if (o.format == "json") {
        std::cout << table_json(in.desc, rows, failures);
    } else {
        std::cout << table_csv(in.desc, rows);
    }
    for (const auto& f : failures) std::cerr << "failure,s=" << f.s << "," << f.what << "\n";
    if (o.verify && failures.empty()) std::cerr << rows.size() << " rows verified\n";
    return failures.empty() ? 0 : 1;
}

int cmd_gv_check(const Options& o) {
    auto r = gv_check(o.alphabet, o.N, o.k, o.d, o.gv_cross_check);
    std::cout << gv_report(o.alphabet, o.N, o.k, o.d, r);
    return r.full_sum_agrees.value_or(true) ? 0 : 1;
}

void instance_flags(CLI::App* sub, Options& o) {
    sub->add_option("--family", o.family, "gk | ggs | abq | ggk2");
    sub->add_option("--q", o.q, "prime power q");
    sub->add_option("--n", o.n, "odd n (GGS, ABQ, GGK2)");
    sub->add_option("--cache-dir", o.cache_dir, std::string("point cache directory (default $") + kCacheEnv + " or " +
                                                    kDefaultCacheDir + ")");
    sub->add_flag("--slow", o.slow, "allow GF(1024) and larger instances");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"AG codes from Swiss divisors and the quantum codes they give"};
    app.require_subcommand(1);
    Options o;

    auto* points = app.add_subcommand("points", "enumerate rational places and check maximality");
    instance_flags(points, o);

    auto* swiss = app.add_subcommand("swiss", "A-set, f, f' and the divisor data of omega");
    instance_flags(swiss, o);

    auto* basis = app.add_subcommand("basis", "Riemann-Roch basis of L(sG)");
    instance_flags(basis, o);
    basis->add_option("--s", o.s, "multiple of the infinite places");

    auto* code = app.add_subcommand("code", "evaluation code C(D, sG), or a matrix file with --input");
    instance_flags(code, o);
    code->add_option("--s", o.s, "multiple of the infinite places");
    code->add_option("--min-weight", o.min_weight, "exact | sampled");
    code->add_option("--seed", o.seed, "seed for sampled min weight");
    code->add_option("--samples", o.samples, "codewords drawn in sampled mode");
    code->add_flag("--dual", o.dual, "with --format matrix, emit the dual code");
    code->add_option("--input", o.input, "matrix file to read instead of building a code");

    auto* table = app.add_subcommand("quantum-table", "theorem table rows as CSV or JSON");
    instance_flags(table, o);
    table->add_option("--s-min", o.s_min, "first s (m for GGK2)");
    table->add_option("--s-max", o.s_max, "last s");
    table->add_flag("--verify", o.verify, "build every code and compare with the formulas");
    table->add_flag("--gv", o.gv, "evaluate the quantum GV inequality per row");
    table->add_flag("--gv-cross-check", o.gv_cross_check, "also run the full sum when the dominant term decides");

    auto* gv = app.add_subcommand("gv-check", "exact quantum GV inequality for one parameter set");
    gv->add_option("--alphabet,--Q", o.alphabet, "alphabet size")->required();
    gv->add_option("--N", o.N, "length")->required();
    gv->add_option("--k", o.k, "dimension")->required();
    gv->add_option("--d", o.d, "distance")->required();
    gv->add_flag("--cross-check", o.gv_cross_check, "also run the full sum when the dominant term decides");

    for (auto* sub : {points, swiss, basis, code, table, gv}) {
        sub->add_option("--jobs", o.jobs, "worker threads (default: hardware concurrency)");
        sub->add_option("--format", o.format, "json | csv | matrix (quantum-table defaults to csv)");
        sub->add_option("--moduli", o.moduli, "moduli config file (default: built-in table)");
    }

    CLI11_PARSE(app, argc, argv);
    if (table->parsed() && table->get_option("--format")->count() == 0) o.format = "csv";

    try {
        if (points->parsed()) return cmd_points(o);
        if (swiss->parsed()) return cmd_swiss(o);
        if (basis->parsed()) return cmd_basis(o);
        if (code->parsed()) return cmd_code(o);
        if (table->parsed()) return cmd_quantum_table(o);
        if (gv->parsed()) return cmd_gv_check(o);
    } catch (const CountMismatch& e) {
        std::cerr << "count mismatch: " << e.what() << "\n";
        return 1;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const BasisShortfall& e) {
        std::cerr << "basis failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
