// trilat -- exact enumeration of equilateral triangles and regular
// tetrahedra with integer coordinates in 3-space.
//
// Output is machine readable: one JSON object per line (default), or CSV for
// the count sequences (--csv). Integers are never emitted as floats.

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trilat/diophantine.hpp"
#include "trilat/enumeration.hpp"
#include "trilat/families.hpp"
#include "trilat/geometry.hpp"
#include "trilat/numtheory.hpp"
#include "trilat/records.hpp"

namespace {

using namespace trilat;

void emit(const OutputRecord& rec) { std::cout << to_json_line(rec) << '\n'; }

std::array<i64, 3> as_array(const LatticePoint& p) { return {p.x, p.y, p.z}; }

TriangleRecord triangle_record(const LatticeTriangle& t,
                               std::optional<std::array<i64, 2>> mn = std::nullopt) {
    TriangleRecord r;
    for (int i = 0; i < 3; ++i) r.vertices[i] = as_array(t.vertices[i]);
    r.sq_side = t.sq_side;
    r.mn = mn;
    return r;
}

CountRecord count_record(const CountResult& c, const std::string& shape) {
    CountRecord r;
    r.shape = shape;
    r.n = c.n;
    r.count = c.count;
    r.method = c.method;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(c.elapsed).count();
    r.threads = c.threads;
    return r;
}

PlaneClass parse_plane(const std::vector<i64>& v) {
    if (v.size() != 4)
        throw CLI::ValidationError("--plane", "expected a,b,c,d");
    try {
        return make_plane_class(v[0], v[1], v[2], v[3]);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--plane", e.what());
    }
}

int run_planes(i64 d, i64 d_min, i64 d_max) {
    std::vector<i64> ds;
    if (d > 0) ds.push_back(d);
    else {
        for (i64 v = d_min; v <= d_max; ++v)
            if (v % 2 == 1) ds.push_back(v);
    }
    for (i64 v : ds) {
        for (const auto& p : primitive_solutions(v))
            emit(OutputRecord{PlaneRecord{p.d, p.a, p.b, p.c}});
    }
    return 0;
}

int run_count(bool et, i64 n, i64 n_min, i64 n_max, const std::string& method, int threads,
              bool csv) {
    std::vector<i64> ns;
    if (n >= 0) ns.push_back(n);
    else
        for (i64 v = n_min; v <= n_max; ++v) ns.push_back(v);
    if (csv) std::cout << count_csv_header() << '\n';
    for (i64 v : ns) {
        GridSpec g{static_cast<int>(v)};
        CountResult res;
        std::string shape = et ? "et" : "rt";
        if (method == "brute")
            res = et ? count_et_bruteforce(g) : count_rt_bruteforce(g);
        else
            res = et ? count_et(g, threads) : count_rt(g, threads);
        CountRecord rec = count_record(res, shape);
        if (csv) std::cout << to_csv_line(rec) << '\n';
        else emit(OutputRecord{rec});
    }
    return 0;
}

int run_family(const std::vector<i64>& plane_values, i64 range) {
    PlaneClass p = parse_plane(plane_values);
    TriangleFamily fam;
    try {
        fam = build_family(p);
    } catch (const GcdPivotError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    FamilyRecord fr;
    fr.plane = {p.a, p.b, p.c, p.d};
    const auto& k = fam.coeffs;
    fr.coeffs = {k.m_u, k.m_v, k.m_w, k.n_u, k.n_v, k.n_w,
                 k.m_x, k.m_y, k.m_z, k.n_x, k.n_y, k.n_z};
    if (fam.rs) fr.rs = std::array<i64, 2>{fam.rs->r, fam.rs->s};
    fr.pivot = fam.pivot;
    emit(OutputRecord{fr});
    for (i64 m = -range; m <= range; ++m)
        for (i64 n = -range; n <= range; ++n) {
            if (m == 0 && n == 0) continue;
            emit(OutputRecord{
                triangle_record(emit_triangle(fam, FamilyPoint{m, n}), {{m, n}})});
        }
    return 0;
}

int run_classify_side(i64 sq_side) {
    ClassifyRecord rec;
    rec.sq_side = sq_side;
    if (auto witness = classify_side(sq_side)) {
        rec.realizable = true;
        rec.mn = {witness->m, witness->n};
    }
    emit(OutputRecord{rec});
    return 0;
}

int run_classify_tetra(i64 k, bool congruence) {
    auto orbits = congruence ? origin_tetra_congruence_classes(k) : origin_tetra_orbits(k);
    for (const auto& orb : orbits) {
        TetrahedronRecord r;
        for (int i = 0; i < 4; ++i) r.vertices[i] = as_array(orb.representative.vertices[i]);
        r.sq_side = orb.representative.sq_side;
        r.orbit_size = orb.size;
        emit(OutputRecord{r});
    }
    return 0;
}

void emit_probe_case(const ProbeCase& pc) {
    ProbeCaseRecord r;
    r.plane = {pc.plane.a, pc.plane.b, pc.plane.c, pc.plane.d};
    r.m = pc.m;
    r.n = pc.n;
    r.norm = pc.norm;
    r.side_root = pc.side_root;
    r.apex_found = pc.apex_found;
    if (pc.apex) r.apex = as_array(*pc.apex);
    emit(OutputRecord{r});
}

int run_probe(i64 d_max, i64 range, i64 sample, i64 sample_range, unsigned long long seed) {
    auto report = conjecture_probe(d_max, range);
    for (const auto& pc : report.cases)
        emit_probe_case(pc);
    if (sample > 0) {
        // seeded random sampling of larger (m,n) with square norm value
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<i64> dist(-sample_range, sample_range);
        for (i64 d = 1; d <= d_max; d += 2)
            for (const auto& plane : primitive_solutions(d)) {
                TriangleFamily fam = build_family(plane);
                i64 found = 0, attempts = 0;
                while (found < sample && attempts < sample * 1000) {
                    ++attempts;
                    i64 m = dist(rng), n = dist(rng);
                    if (m == 0 && n == 0) continue;
                    i64 norm = m * m - m * n + n * n;
                    i64 root = isqrt(norm);
                    if (root * root != norm) continue;
                    ++found;
                    ProbeCase pc;
                    pc.plane = plane;
                    pc.m = m;
                    pc.n = n;
                    pc.norm = norm;
                    pc.side_root = d * root;
                    auto apexes = tetra_apexes(emit_triangle(fam, FamilyPoint{m, n}));
                    pc.apex_found = !apexes.empty();
                    if (pc.apex_found) pc.apex = apexes.front();
                    emit_probe_case(pc);
                }
            }
    }
    return 0;
}

int run_orbits(const std::vector<i64>& plane_values) {
    PlaneClass p = parse_plane(plane_values);
    for (const auto& nrm : orbit_expand(p))
        emit(OutputRecord{OrbitRecord{{nrm.a, nrm.b, nrm.c}, nrm.d}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice equilateral triangles and regular tetrahedra"};
    app.require_subcommand(1);
    app.fallthrough(); // let subcommands pass --seed up to the parent

    unsigned long long seed = 0x5eed;
    app.add_option("--seed", seed, "seed for randomized sampling modes")->capture_default_str();

    // planes
    auto* planes = app.add_subcommand("planes", "primitive plane classes a^2+b^2+c^2=3d^2");
    i64 pl_d = 0, pl_dmin = 1, pl_dmax = 0;
    planes->add_option("--d", pl_d, "single odd d")->check(CLI::PositiveNumber);
    planes->add_option("--d-min", pl_dmin, "range start (default 1)");
    planes->add_option("--d-max", pl_dmax, "range end (odd values only)");

    // count
    auto* count = app.add_subcommand("count", "ET(n) / RT(n) grid counts");
    bool c_et = false, c_rt = false, c_csv = false;
    i64 c_n = -1, c_nmin = 0, c_nmax = -1;
    std::string c_method = "pair";
    int c_threads = 1;
    count->add_flag("--et", c_et, "count equilateral triangles");
    count->add_flag("--rt", c_rt, "count regular tetrahedra");
    count->add_option("--n", c_n, "single grid size n");
    count->add_option("--n-min", c_nmin, "range start (default 0)");
    count->add_option("--n-max", c_nmax, "range end");
    count->add_option("--method", c_method, "pair|brute")
        ->check(CLI::IsMember({"pair", "brute"}));
    count->add_option("--threads", c_threads, "worker threads")->check(CLI::PositiveNumber);
    bool c_json = false;
    auto* opt_json = count->add_flag("--json", c_json, "JSON lines output (default)");
    count->add_flag("--csv", c_csv, "CSV output")->excludes(opt_json);

    // family
    auto* family = app.add_subcommand("family", "two-parameter triangle family of a plane class");
    std::vector<i64> f_plane;
    i64 f_range = 2;
    family->add_option("--plane", f_plane, "a,b,c,d")->delimiter(',')->expected(4)->required();
    family->add_option("--range", f_range, "emit triangles for |m|,|n| <= range")
        ->check(CLI::NonNegativeNumber);

    // classify
    auto* classify = app.add_subcommand("classify", "side-length witness / tetra orbits");
    i64 cl_side = 0, cl_tetra = 0;
    bool cl_congruence = false;
    auto* opt_side = classify->add_option("--side-sq", cl_side, "squared side length");
    auto* opt_tetra = classify->add_option("--tetra", cl_tetra, "side k*sqrt(2): orbit census");
    classify->add_flag("--congruence", cl_congruence,
                       "group tetrahedra up to re-anchoring as well");
    opt_side->excludes(opt_tetra);
    opt_tetra->excludes(opt_side);

    // probe
    auto* probe = app.add_subcommand("probe", "square-norm triangles vs tetra apex existence");
    i64 p_dmax = 9, p_range = 6, p_sample = 0, p_sample_range = 50;
    probe->add_option("--d-max", p_dmax, "plane classes up to this d")->check(CLI::PositiveNumber);
    probe->add_option("--range", p_range, "exhaustive |m|,|n| bound")->check(CLI::PositiveNumber);
    probe->add_option("--sample", p_sample, "additional random square-norm samples per class");
    probe->add_option("--sample-range", p_sample_range, "|m|,|n| bound for sampling");

    // orbits
    auto* orbits = app.add_subcommand("orbits", "signed-permutation images of a plane class");
    std::vector<i64> o_plane;
    orbits->add_option("--plane", o_plane, "a,b,c,d")->delimiter(',')->expected(4)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (planes->parsed()) {
            if (pl_d == 0 && pl_dmax == 0)
                throw CLI::ValidationError("planes", "need --d or --d-max");
            if (pl_d != 0 && pl_d % 2 == 0)
                throw CLI::ValidationError("--d", "d must be odd");
            return run_planes(pl_d, pl_dmin, pl_dmax);
        }
        if (count->parsed()) {
            if (c_et == c_rt)
                throw CLI::ValidationError("count", "exactly one of --et / --rt");
            if (c_n < 0 && c_nmax < 0)
                throw CLI::ValidationError("count", "need --n or --n-max");
            return run_count(c_et, c_n, c_nmin, c_nmax, c_method, c_threads, c_csv);
        }
        if (family->parsed()) return run_family(f_plane, f_range);
        if (classify->parsed()) {
            if ((cl_side == 0) == (cl_tetra == 0))
                throw CLI::ValidationError("classify", "exactly one of --side-sq / --tetra");
            if (cl_side > 0) return run_classify_side(cl_side);
            return run_classify_tetra(cl_tetra, cl_congruence);
        }
        if (probe->parsed()) return run_probe(p_dmax, p_range, p_sample, p_sample_range, seed);
        if (orbits->parsed()) return run_orbits(o_plane);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
