#include "permgen/metrics.hpp"

#include "permgen/optimized_generator.hpp"
#include "permgen/reference_generators.hpp"
#include "permgen/shift_cursor.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

namespace permgen {

namespace {

template <class Counter, class Visitor>
void dispatch(const std::string& name, int n, std::optional<int> j, Counter cnt,
              Visitor&& visit) {
    if (name == "shift-cursor") {
        shift_cursor_generate(n, cnt, std::forward<Visitor>(visit));
    } else if (name == "alg1") {
        if (!j) {
            throw std::invalid_argument("alg1 requires an unroll level j");
        }
        algorithm1_generate(n, *j, cnt, std::forward<Visitor>(visit));
    } else if (name == "johnson-trotter") {
        johnson_trotter_generate(n, cnt, std::forward<Visitor>(visit));
    } else if (name == "heap") {
        heap_generate(n, cnt, std::forward<Visitor>(visit));
    } else if (name == "lex") {
        lexicographic_generate(n, cnt, std::forward<Visitor>(visit));
    } else {
        throw std::invalid_argument("unknown generator: " + name);
    }
}

std::uint64_t timed_raw_run(const BenchSpec& spec) {
    ChecksumSink sink;
    const auto t0 = std::chrono::steady_clock::now();
    dispatch(spec.generator, spec.n, spec.j, NoCount{}, sink);
    const auto t1 = std::chrono::steady_clock::now();
    // keep the sink observable
    volatile std::uint64_t keep = sink.sum;
    (void)keep;
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
}

}  // namespace

const std::vector<std::string>& known_generators() {
    static const std::vector<std::string> names = {
        "shift-cursor", "alg1", "johnson-trotter", "heap", "lex"};
    return names;
}

BenchRun run_bench(const BenchSpec& spec) {
    if (std::find(known_generators().begin(), known_generators().end(),
                  spec.generator) == known_generators().end()) {
        throw std::invalid_argument("unknown generator: " + spec.generator);
    }
    if (spec.n < 1 || spec.n > spec.max_n) {
        throw std::invalid_argument("n out of range: valid interval is [1, " +
                                    std::to_string(spec.max_n) + "]");
    }
    if (spec.repetitions < 1) {
        throw std::invalid_argument("repetitions must be at least 1");
    }

    BenchRun run;
    run.generator = spec.generator;
    run.n = spec.n;
    run.j = spec.j;
    run.repetitions = spec.repetitions;

    // instrumented pass: counters, checksum, emission count
    ChecksumSink sink;
    if (spec.generator == "alg1") {
        if (!spec.j) {
            throw std::invalid_argument("alg1 requires an unroll level j");
        }
        const Alg1Stats stats = algorithm1(spec.n, *spec.j, sink);
        run.stores = stats.counters.stores;
        run.decisions = stats.counters.decisions;
        run.decision_free = stats.decision_free;
    } else {
        OpCounters c;
        dispatch(spec.generator, spec.n, spec.j, Counting{&c}, sink);
        run.stores = c.stores;
        run.decisions = c.decisions;
    }
    run.perms = sink.count;
    run.checksum = sink.sum;

    // timed passes share the raw (uncounted) flavor of the same code path
    std::vector<std::uint64_t> times;
    times.reserve(static_cast<std::size_t>(spec.repetitions));
    for (int r = 0; r < spec.repetitions; ++r) {
        times.push_back(timed_raw_run(spec));
    }
    std::sort(times.begin(), times.end());
    run.wall_ns = times[times.size() / 2];
    return run;
}

std::string emit_csv(const std::vector<BenchRun>& runs) {
    std::string out =
        "generator,n,j,perms,stores,decisions,stores_per_perm,"
        "decisions_per_perm,wall_ns\n";
    char buf[64];
    for (const BenchRun& r : runs) {
        const double perms = r.perms > 0 ? static_cast<double>(r.perms) : 1.0;
        out += r.generator;
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        if (r.j) {
            out += std::to_string(*r.j);
        }
        out += ',';
        out += std::to_string(r.perms);
        out += ',';
        out += std::to_string(r.stores);
        out += ',';
        out += std::to_string(r.decisions);
        out += ',';
        std::snprintf(buf, sizeof(buf), "%.6f", static_cast<double>(r.stores) / perms);
        out += buf;
        out += ',';
        std::snprintf(buf, sizeof(buf), "%.6f", static_cast<double>(r.decisions) / perms);
        out += buf;
        out += ',';
        out += std::to_string(r.wall_ns);
        out += '\n';
    }
    return out;
}

std::string summary_line(const BenchRun& run) {
    const double perms = run.perms > 0 ? static_cast<double>(run.perms) : 1.0;
    const std::string jpart = run.j ? " j=" + std::to_string(*run.j) : "";
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%s n=%d%s: perms=%llu stores/perm=%.6f decisions/perm=%.6f "
                  "wall=%lluns",
                  run.generator.c_str(), run.n, jpart.c_str(),
                  static_cast<unsigned long long>(run.perms),
                  static_cast<double>(run.stores) / perms,
                  static_cast<double>(run.decisions) / perms,
                  static_cast<unsigned long long>(run.wall_ns));
    return buf;
}

}  // namespace permgen
