// choi-faces: classify, decompose and inspect the states A[a,b,c].
//
// Exit codes: 0 ok, 1 domain negative (not separable, failed verification),
// 2 input error, 3 I/O error.

#include "choi/certificate.hpp"
#include "choi/classifier.hpp"
#include "choi/decomposer.hpp"
#include "choi/error.hpp"
#include "choi/faces.hpp"
#include "choi/maps.hpp"
#include "choi/states.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <tuple>

using namespace choi;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kIo = 3 };

// lo, hi, steps
using Range = std::tuple<double, double, int>;

double range_at(const Range& r, int k)
{
    const auto [lo, hi, steps] = r;
    return steps == 1 ? lo : lo + (hi - lo) * k / (steps - 1);
}

std::string fmt(double v)
{
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

json number_or_string(double v) { return std::isfinite(v) ? json(v) : json(fmt(v)); }

void add_abc(CLI::App* cmd, StateParams& p)
{
    cmd->add_option("a", p.a, "diagonal weight on the a-slots")->required();
    cmd->add_option("b", p.b, "diagonal weight on the b-slots")->required();
    cmd->add_option("c", p.c, "diagonal weight on the c-slots")->required();
}

// Only the PPT states have a meaningful (p, q).
std::optional<StateType> type_if_ppt(const StateParams& p, double tol)
{
    if (!is_ppt_params(p, tol)) return std::nullopt;
    try {
        return state_type(p);
    } catch (const Error&) {
        return std::nullopt;
    }
}

int cmd_classify(const StateParams& p, double tol, bool as_json)
{
    const Classification cls = classify(p, tol);
    const BoundaryElement el = boundary_element(p, tol);
    const auto type = type_if_ppt(p, tol);
    const WitnessPoint w = analytic_witness_minimum(p);

    if (as_json) {
        json j{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"verdict", to_string(cls.verdict)},
               {"boundary", to_string(el.tag)}, {"tolerance", cls.tolerance_used},
               {"witness", {{"t", number_or_string(w.t)}, {"value", w.value}}}};
        if (el.b) j["boundary_b"] = *el.b;
        if (el.s) j["boundary_s"] = *el.s;
        j["type"] = type ? json::array({type->p, type->q}) : json(nullptr);
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    std::cout << "verdict:  " << to_string(cls.verdict) << '\n';
    std::cout << "boundary: " << to_string(el.tag);
    if (el.b) std::cout << " (b = " << fmt(*el.b) << ")";
    if (el.s) std::cout << " (s = " << fmt(*el.s) << ")";
    std::cout << '\n';
    if (type) std::cout << "type:     (" << type->p << ", " << type->q << ")\n";
    std::cout << "witness:  min over Phi(t) = " << fmt(w.value) << " at t = " << fmt(w.t) << '\n';
    return kOk;
}

int write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open " << path << " for writing\n";
        return kIo;
    }
    out << text;
    out.flush();
    if (!out) {
        std::cerr << "write to " << path << " failed\n";
        return kIo;
    }
    return kOk;
}

int cmd_decompose(const StateParams& p, double tol, bool as_json, bool verify, const std::string& output)
{
    const Classification cls = classify(p, tol);
    if (!cls.is_separable()) {
        std::cerr << "not separable: " << to_string(cls.verdict) << '\n';
        return kNegative;
    }
    const Decomposition d = decompose_general(p, tol);
    const json cert = to_json(d);

    if (!output.empty())
        if (int rc = write_text(output, cert.dump(2) + "\n"); rc != kOk) return rc;

    if (as_json) {
        std::cout << cert.dump(2) << '\n';
    } else if (output.empty()) {
        std::cout << d.size() << " terms, total weight " << fmt(d.total_weight()) << '\n';
        for (const auto& t : d.terms()) {
            std::cout << "  " << fmt(t.weight) << "  x = (";
            for (int k = 0; k < 3; ++k) std::cout << (k ? ", " : "") << fmt(t.vector.x[k].real()) << (t.vector.x[k].imag() < 0 ? "" : "+") << fmt(t.vector.x[k].imag()) << "i";
            std::cout << ")  y = (";
            for (int k = 0; k < 3; ++k) std::cout << (k ? ", " : "") << fmt(t.vector.y[k].real()) << (t.vector.y[k].imag() < 0 ? "" : "+") << fmt(t.vector.y[k].imag()) << "i";
            std::cout << ")\n";
        }
    }
    if (verify) {
        const VerifyResult r = verify_certificate(d);
        (as_json ? std::cerr : std::cout) << "residual: " << fmt(r.residual) << '\n';
        if (!r.ok) return kNegative;
    }
    return kOk;
}

struct SweepRow {
    StateParams p;
    Verdict verdict;
    BoundaryTag tag;
    WitnessPoint witness;
};

int cmd_sweep(const Range& ra, const Range& rb, const Range& rc, const std::string& output, unsigned threads, double tol)
{
    for (const Range* r : {&ra, &rb, &rc})
        if (std::get<2>(*r) < 1 || std::get<0>(*r) > std::get<1>(*r)) {
            std::cerr << "ranges need lo <= hi and steps >= 1\n";
            return kInput;
        }
    const std::size_t nb = std::get<2>(rb), nc = std::get<2>(rc);
    const std::size_t total = static_cast<std::size_t>(std::get<2>(ra)) * nb * nc;
    std::vector<SweepRow> rows(total);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const StateParams p{range_at(ra, static_cast<int>(k / (nb * nc))),
                                range_at(rb, static_cast<int>(k / nc % nb)), range_at(rc, static_cast<int>(k % nc))};
            rows[k] = {p, classify(p, tol).verdict, boundary_element(p, tol).tag, analytic_witness_minimum(p)};
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t begin = w * chunk, end = std::min(total, begin + chunk);
        if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv.precision(17);
    csv << "a,b,c,verdict,tag,t_min,witness_min\n";
    for (const auto& r : rows)
        csv << r.p.a << ',' << r.p.b << ',' << r.p.c << ',' << to_string(r.verdict) << ',' << to_string(r.tag) << ','
            << fmt(r.witness.t) << ',' << r.witness.value << '\n';

    if (output.empty() || output == "-") {
        std::cout << csv.str();
        return std::cout ? kOk : kIo;
    }
    return write_text(output, csv.str());
}

int cmd_face(const StateParams& p, double tol, int samples)
{
    const Classification cls = classify(p, tol);
    if (!cls.is_separable()) {
        std::cerr << "not separable: " << to_string(cls.verdict) << '\n';
        return kNegative;
    }
    const BoundaryElement el = boundary_element(p, tol);
    const StateType type = state_type(p);
    std::cout << "boundary:     " << to_string(el.tag);
    if (el.b) std::cout << " (b = " << fmt(*el.b) << ")";
    if (el.s) std::cout << " (s = " << fmt(*el.s) << ")";
    std::cout << '\n';
    std::cout << "type:         (" << type.p << ", " << type.q << ")\n";
    std::cout << "kernel dims:  (" << 9 - type.p << ", " << 9 - type.q << ")\n";
    try {
        std::cout << "Q family:     " << q_family(el).description() << '\n';
    } catch (const Error&) {
        std::cout << "Q family:     no closed form\n";
    }

    const TheoremIvReport r = theorem_iv_check(p, samples);
    switch (el.tag) {
    case BoundaryTag::Vb:
        std::cout << "theorem (iv): negative case; " << r.dual_face_members << "/" << r.samples
                  << " random Q-members lie in the dual face of Phi(1/b), " << r.restricted_passed << "/"
                  << r.restricted_samples << " restricted members decompose through themselves\n";
        break;
    default:
        if (r.status == TheoremIvStatus::NotApplicable) {
            std::cout << "theorem (iv): n/a\n";
        } else {
            std::cout << "theorem (iv): " << to_string(r.status) << " (" << r.passed << "/" << r.samples
                      << " samples, max residual " << fmt(r.max_residual) << ")\n";
        }
    }
    return kOk;
}

int cmd_verify(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot read " << path << '\n';
        return kIo;
    }
    Decomposition d;
    try {
        d = decomposition_from_json(json::parse(in));
    } catch (const json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << '\n';
        return kInput;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kInput;
    }
    const VerifyResult r = verify_certificate(d);
    std::cout << "residual: " << fmt(r.residual) << '\n';
    std::cout << "weights positive: " << (r.weights_positive ? "yes" : "no") << '\n';
    std::cout << (r.ok ? "OK" : "FAILED") << '\n';
    return r.ok ? kOk : kNegative;
}

int cmd_witness(const StateParams& p, double t_min, double t_max, int grid, bool as_json)
{
    const WitnessScan s = witness_scan(p, grid, t_min, t_max);
    if (as_json) {
        std::cout << json{{"t_best", s.t_best},
                          {"value", s.value},
                          {"zero_crossings", s.zero_crossings},
                          {"analytic", {{"t", number_or_string(s.analytic.t)}, {"value", s.analytic.value}}}}
                         .dump(2)
                  << '\n';
        return kOk;
    }
    std::cout << "grid minimum:     " << fmt(s.value) << " at t = " << fmt(s.t_best) << '\n';
    std::cout << "analytic minimum: " << fmt(s.analytic.value) << " at t = " << fmt(s.analytic.t) << '\n';
    std::cout << "zero crossings:  ";
    if (s.zero_crossings.empty()) std::cout << " none";
    for (double t : s.zero_crossings) std::cout << ' ' << fmt(t);
    std::cout << '\n';
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    double tol = kClassificationTol;
    if (const char* env = std::getenv("CHOI_FACES_TOL")) {
        char* end = nullptr;
        tol = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(tol >= 0.0) || !std::isfinite(tol)) {
            std::cerr << "CHOI_FACES_TOL must be a non-negative number\n";
            return kInput;
        }
    }

    CLI::App app{"Classify, decompose and inspect the 3x3 states A[a,b,c]"};
    app.require_subcommand(1);
    StateParams p;
    bool as_json = false;

    auto* classify_cmd = app.add_subcommand("classify", "verdict, boundary element, type and witness minimum");
    add_abc(classify_cmd, p);
    classify_cmd->add_flag("--json", as_json, "machine-readable output");

    bool verify = false;
    std::string output;
    auto* decompose_cmd = app.add_subcommand("decompose", "separable decomposition certificate");
    add_abc(decompose_cmd, p);
    decompose_cmd->add_flag("--json", as_json, "print the certificate as JSON");
    decompose_cmd->add_flag("--verify", verify, "recompute and print the residual");
    decompose_cmd->add_option("-o,--output", output, "also write the certificate to this file");

    Range ra, rb, rc;
    unsigned threads = 1;
    std::string sweep_out;
    auto* sweep_cmd = app.add_subcommand("sweep", "classify a grid of parameters into CSV");
    sweep_cmd->add_option("--a", ra, "lo hi steps")->required();
    sweep_cmd->add_option("--b", rb, "lo hi steps")->required();
    sweep_cmd->add_option("--c", rc, "lo hi steps")->required();
    sweep_cmd->add_option("-o,--output", sweep_out, "CSV path (stdout if omitted)");
    sweep_cmd->add_option("-j,--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    int samples = 50;
    auto* face_cmd = app.add_subcommand("face", "face data and the decomposition-through-Q check");
    add_abc(face_cmd, p);
    face_cmd->add_option("--samples", samples, "random Q-members to test")->check(CLI::PositiveNumber);

    std::string cert_path;
    auto* verify_cmd = app.add_subcommand("verify", "check a decomposition certificate");
    verify_cmd->add_option("path", cert_path, "certificate JSON")->required();

    double t_min = 1e-3, t_max = 1e3;
    int grid = 1001;
    auto* witness_cmd = app.add_subcommand("witness", "scan <A, Phi(t)> over a log grid of t");
    add_abc(witness_cmd, p);
    witness_cmd->add_option("--t-min", t_min, "smallest t")->check(CLI::PositiveNumber);
    witness_cmd->add_option("--t-max", t_max, "largest t")->check(CLI::PositiveNumber);
    witness_cmd->add_option("--grid", grid, "grid points")->check(CLI::PositiveNumber);
    witness_cmd->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (*classify_cmd) return cmd_classify(p, tol, as_json);
        if (*decompose_cmd) return cmd_decompose(p, tol, as_json, verify, output);
        if (*sweep_cmd) return cmd_sweep(ra, rb, rc, sweep_out, threads, tol);
        if (*face_cmd) return cmd_face(p, tol, samples);
        if (*verify_cmd) return cmd_verify(cert_path);
        if (*witness_cmd) return cmd_witness(p, t_min, t_max, grid, as_json);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        switch (e.kind()) {
        case ErrorKind::NotSeparable:
        case ErrorKind::NotPPT: return kNegative;
        default: return kInput;
        }
    }
    return kInput;
}
