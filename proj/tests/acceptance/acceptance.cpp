// Acceptance gate: prints one PASS/FAIL line per criterion and exits nonzero on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "maze.hpp"
#include "mutants.hpp"
#include "oracle.hpp"
#include "set_builder.hpp"
#include "slcs/checker.hpp"
#include "slcs/closure.hpp"
#include "slcs/parser.hpp"
#include "slcs/script.hpp"

using namespace slcs;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kBoundaryPairs = 1000;
constexpr std::size_t kBoundaryMaxPoints = 50;
constexpr double kBoundarySeconds = 5.0;

constexpr int kSmallRelations = 500;
constexpr std::size_t kSmallMaxPoints = 5;
constexpr int kSampledRelations = 200;
constexpr std::size_t kSampledMaxPoints = 12;

constexpr int kOracleTrials = 10000;
constexpr std::size_t kOracleMaxPoints = 30;
constexpr std::size_t kOracleDepth = 4;
constexpr double kOracleSeconds = 60.0;

constexpr int kForwardInstances = 200;
constexpr int kMutationSeeds = 200;

constexpr int kScalingMinExp = 14;
constexpr int kScalingMaxExp = 18;
constexpr double kScalingSpread = 2.0;
constexpr double kScalingMinSampleSeconds = 0.2;

constexpr std::size_t kMazeSide = 500;
constexpr double kMazeSeconds = 10.0;
constexpr double kMazeTargetSeconds = 2.0;

int failures = 0;

void report(int id, bool ok, const std::string& title, const std::string& detail) {
    std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

struct Instance {
    SpaceGraph space;
    PointSet a;
};

std::vector<Instance> boundary_corpus() {
    testing::Rng rng(1001);
    std::vector<Instance> corpus;
    for (int i = 0; i < kBoundaryPairs; ++i) {
        const std::size_t n = testing::pick(rng, kBoundaryMaxPoints + 1);
        const double density = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
        SpaceGraph g = testing::random_graph(rng, n, density, testing::coin(rng, 0.4));
        PointSet a = testing::random_subset(rng, n, std::uniform_real_distribution<double>(0.0, 1.0)(rng));
        corpus.push_back({std::move(g), std::move(a)});
    }
    return corpus;
}

void criterion_boundary_algebra(const std::vector<Instance>& corpus) {
    const auto start = Clock::now();
    int bad = 0;
    for (const auto& [g, a] : corpus) {
        const PointSet na = a.complement();
        const PointSet b = boundary(g, a), bm = boundary_minus(g, a), bp = boundary_plus(g, a);
        const bool ok = b == (bp | bm) && (bp & bm).none() && b == boundary(g, na) && bp == boundary_minus(g, na) &&
                        bp == (b & na) && bm == (b & a) && b == (closure(g, a) & closure(g, na));
        bad += !ok;
    }
    const double t = seconds_since(start);
    report(1, bad == 0 && t < kBoundarySeconds, "boundary algebra",
           fmt("%zu pairs (|X| <= %zu), 7 equations, %d violations, %.3f s (limit %.0f s)", corpus.size(),
               kBoundaryMaxPoints, bad, t, kBoundarySeconds));
}

void criterion_set_builder(const std::vector<Instance>& corpus) {
    int bad = 0;
    for (const auto& [g, a] : corpus) {
        const auto sb = testing::set_builder(g, a);
        bad += !(interior(g, a) == sb.interior && boundary_minus(g, a) == sb.boundary_minus &&
                 boundary_plus(g, a) == sb.boundary_plus);
    }
    report(2, bad == 0, "set-builder forms",
           fmt("%zu pairs, interior / inner / outer boundary, %d mismatches", corpus.size(), bad));
}

bool idempotent_by_enumeration(const SpaceGraph& g) {
    const std::size_t n = g.point_count();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        const PointSet c = closure(g, testing::subset_from_mask(n, mask));
        if (closure(g, c) != c) return false;
    }
    return true;
}

void criterion_idempotency() {
    testing::Rng rng(1003);
    int bad = 0, positives = 0, total = 0;
    auto run = [&](std::size_t max_n, int count) {
        for (int i = 0; i < count; ++i) {
            const std::size_t n = 1 + testing::pick(rng, max_n);
            const double density = std::uniform_real_distribution<double>(0.05, 0.7)(rng);
            const SpaceGraph g = testing::random_graph(rng, n, density);
            const bool expected = idempotent_by_enumeration(g);
            bad += is_idempotent(g) != expected;
            positives += expected;
            ++total;
        }
    };
    run(kSmallMaxPoints, kSmallRelations);
    run(kSampledMaxPoints, kSampledRelations);
    report(3, bad == 0 && positives > 0 && positives < total, "idempotency characterization",
           fmt("%d relations with |X| <= %zu and %d with |X| <= %zu, all subsets enumerated, %d idempotent, "
               "%d mismatches",
               kSmallRelations, kSmallMaxPoints, kSampledRelations, kSampledMaxPoints, positives, bad));
}

void criterion_color_grid() {
    const ClosureModel m = testing::load_color_grid();
    const auto sat = [&](const char* text) { return check(m, parse_formula(text)).satisfying; };
    const bool yellow = sat("yellow U red") == *m.letter("yellow");
    const bool green = sat("green U blue") == *m.letter("green");
    const bool iy = interior(m.space(), *m.letter("yellow")) == testing::named(m, {"c1r1"});
    const bool ig = interior(m.space(), *m.letter("green")).none();
    report(4, yellow && green && iy && ig, "color grid fixture",
           fmt("yellow U red = yellow: %s; green U blue = green: %s; I(yellow) = {c1r1}: %s; I(green) empty: %s",
               yellow ? "yes" : "no", green ? "yes" : "no", iy ? "yes" : "no", ig ? "yes" : "no"));
}

bool uses_path_operator(const Formula& f) {
    const Op op = f.op();
    if (op == Op::Until || op == Op::Reach || op == Op::Global || op == Op::Future) return true;
    if (arity(op) >= 1 && uses_path_operator(f.lhs())) return true;
    return arity(op) == 2 && uses_path_operator(f.rhs());
}

void criterion_oracle() {
    testing::Rng rng(1005);
    const auto start = Clock::now();
    int bad = 0, with_paths = 0;
    for (int i = 0; i < kOracleTrials; ++i) {
        const std::size_t n = 1 + testing::pick(rng, kOracleMaxPoints);
        const double density = std::uniform_real_distribution<double>(0.02, 0.25)(rng);
        const ClosureModel m = testing::random_model(rng, n, density);
        const Formula f = testing::random_formula(rng, kOracleDepth);
        with_paths += uses_path_operator(f);
        if (check(m, f).satisfying != oracle::satisfies(m, f)) {
            if (bad++ == 0) std::printf("  first discrepancy: trial %d, %s\n", i, to_string(f).c_str());
        }
    }
    const double t = seconds_since(start);
    report(5, bad == 0 && t < kOracleSeconds, "oracle equivalence",
           fmt("%d trials (|X| <= %zu, depth <= %zu, %d with U/R/G/F), %d discrepancies, %.2f s (limit %.0f s)",
               kOracleTrials, kOracleMaxPoints, kOracleDepth, with_paths, bad, t, kOracleSeconds));
}

struct UntilInstance {
    SpaceGraph space;
    PointSet phi;
    PointSet psi;
};

UntilInstance random_until_instance(testing::Rng& rng) {
    const std::size_t n = 2 + testing::pick(rng, 19);
    const double density = std::uniform_real_distribution<double>(0.05, 0.3)(rng);
    return {testing::random_graph(rng, n, density, testing::coin(rng, 0.3)), testing::random_subset(rng, n, 0.7),
            testing::random_subset(rng, n, 0.25)};
}

void criterion_forward_audit() {
    testing::Rng rng(1007);
    int bad = 0;
    std::size_t reported = 0;
    for (int i = 0; i < kForwardInstances; ++i) {
        const auto inst = random_until_instance(rng);
        const ClosureModel m(inst.space, {{"phi", inst.phi}, {"psi", inst.psi}});
        const PointSet u = check_until(m, Formula::atom("phi"), Formula::atom("psi"));
        reported += u.count();
        bad += !oracle::check_forward_theorem(inst.space, inst.phi, inst.psi, u);
    }

    int caught_at = -1;
    int incomplete_at = -1;
    for (int seed = 0; seed < kMutationSeeds && (caught_at < 0 || incomplete_at < 0); ++seed) {
        testing::Rng mrng(static_cast<std::uint64_t>(seed));
        const auto inst = random_until_instance(mrng);
        const PointSet mutated =
            testing::mutated_until(inst.space, inst.phi, inst.psi, testing::UntilMutation::NoPropagation);
        if (caught_at < 0 && !oracle::check_forward_theorem(inst.space, inst.phi, inst.psi, mutated))
            caught_at = seed;
        const PointSet unfiltered =
            testing::mutated_until(inst.space, inst.phi, inst.psi, testing::UntilMutation::UnfilteredStep);
        if (incomplete_at < 0 && unfiltered != oracle::until(inst.space, inst.phi, inst.psi)) incomplete_at = seed;
    }
    report(6, bad == 0 && caught_at >= 0 && incomplete_at >= 0, "forward-theorem audit",
           fmt("%d instances (%zu reported points), %d counterexamples; frontier-step mutant caught by the audit "
               "at seed %d, unfiltered-step mutant caught by the oracle at seed %d (budget %d)",
               kForwardInstances, reported, bad, caught_at, incomplete_at, kMutationSeeds));
}

void criterion_scaling() {
    testing::Rng rng(1009);
    const Formula f = parse_formula("p U q");
    const std::size_t k = formula_size(desugar(f));
    std::vector<double> per_unit;
    std::string detail;
    bool counters_ok = true;
    for (int e = kScalingMinExp; e <= kScalingMaxExp; ++e) {
        const auto side = static_cast<std::size_t>(std::lround(std::sqrt(double(std::size_t{1} << e))));
        RasterImage img(side, side);
        for (std::size_t i = 0; i < img.pixel_count(); ++i) {
            const auto r = rng() % 100;
            img.set_pixel(i, r < 3 ? Rgb{0, 0, 255} : r < 93 ? Rgb{255, 255, 255} : Rgb{0, 0, 0});
        }
        const ClosureModel m = image_to_model(img, Adjacency::Four,
                                              {{"p", {{255, 255}, {255, 255}, {255, 255}}},
                                               {"q", {{0, 0}, {0, 0}, {255, 255}}}});
        const std::size_t units = m.point_count() + m.space().edge_count();

        double best = 1e30;
        const auto sampling = Clock::now();
        int reps = 0;
        while (reps < 5 || seconds_since(sampling) < kScalingMinSampleSeconds) {
            const auto start = Clock::now();
            const CheckOutcome out = check(m, f);
            best = std::min(best, seconds_since(start));
            counters_ok = counters_ok && out.stats.edges_traversed <= k * m.space().edge_count() &&
                          out.stats.max_until_frontier_insertions <= m.point_count() &&
                          out.stats.max_until_frontier_edges <= m.space().edge_count();
            ++reps;
        }
        per_unit.push_back(best / double(units) * 1e9);
        detail += fmt("%s%zux%zu %.2f ns", detail.empty() ? "" : ", ", side, side, per_unit.back());
    }
    const auto [lo, hi] = std::minmax_element(per_unit.begin(), per_unit.end());
    const double spread = *hi / *lo;
    report(7, spread < kScalingSpread && counters_ok, "complexity scaling",
           fmt("time per (|X|+|R|): %s; spread %.2fx (limit %.1fx); edge counters within k*|R| (k=%zu): %s",
               detail.c_str(), spread, kScalingSpread, k, counters_ok ? "yes" : "no"));
}

void criterion_maze_performance() {
    testing::MazeSpec spec;
    spec.width = kMazeSide;
    spec.height = kMazeSide;
    spec.exits = 20;
    spec.starts = 40;
    spec.blocked = 0.002;
    const RasterImage maze = testing::generate_maze(spec);
    const Script script = parse_script(testing::maze_script());
    const auto start = Clock::now();
    const ScriptResult r = run_script(maze, script);
    const double t = seconds_since(start);
    std::string painted;
    for (const auto& p : r.paints) painted += fmt("%s%zu", painted.empty() ? "" : "/", p.painted);
    report(8, t < kMazeSeconds, "maze performance",
           fmt("%zux%zu maze, %zu paints (%s px), %.3f s (target %.0f s, limit %.0f s)", kMazeSide, kMazeSide,
               r.paints.size(), painted.c_str(), t, kMazeTargetSeconds, kMazeSeconds));
}

void criterion_golden() {
    const RasterImage input = read_image(testing::fixture_path("maze.ppm"));
    const Script script = parse_script(testing::read_text(testing::fixture_path("maze.slcs")));
    const std::string golden_bytes = testing::read_text(testing::fixture_path("maze_expected.ppm"));
    const ScriptResult r = run_script(input, script);
    const bool pipeline = encode_ppm(r.image) == golden_bytes;

    std::vector<LetBinding> lets;
    for (const auto& s : script.statements)
        if (const auto* let = std::get_if<LetBinding>(&s)) lets.push_back(*let);
    std::map<std::string, ColorPredicate> predicates;
    std::vector<std::pair<Formula, Rgb>> paints;
    for (const auto& s : script.statements) {
        if (const auto* cmd = std::get_if<PaintCommand>(&s)) {
            paints.emplace_back(resolve_bindings(cmd->formula, lets), cmd->color);
            for (const auto& a : atoms(paints.back().first)) predicates.emplace(a, *parse_color_atom(a));
        }
    }
    const ClosureModel model = image_to_model(input, Adjacency::Four, predicates);
    RasterImage expected = input;
    bool nonempty = true;
    for (const auto& [f, color] : paints) {
        const PointSet s = oracle::satisfies(model, f);
        nonempty = nonempty && s.any();
        expected = paint(expected, s, color);
    }
    const bool oracle_ok = encode_ppm(expected) == golden_bytes;
    report(9, pipeline && oracle_ok && nonempty, "golden maze fixture",
           fmt("%zux%zu generated maze: checker pipeline matches golden: %s; oracle-rebuilt image matches golden: "
               "%s; every paint nonempty: %s",
               input.width(), input.height(), pipeline ? "yes" : "no", oracle_ok ? "yes" : "no",
               nonempty ? "yes" : "no"));
}

} // namespace

int main() {
    const auto corpus = boundary_corpus();
    criterion_boundary_algebra(corpus);
    criterion_set_builder(corpus);
    criterion_idempotency();
    criterion_color_grid();
    criterion_oracle();
    criterion_forward_audit();
    criterion_scaling();
    criterion_maze_performance();
    criterion_golden();
    std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
