#ifndef SRCIRC_CLI_HPP
#define SRCIRC_CLI_HPP

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "srcirc/canonical.hpp"
#include "srcirc/certify.hpp"
#include "srcirc/criterion.hpp"
#include "srcirc/embedding.hpp"
#include "srcirc/expoly.hpp"
#include "srcirc/oracle.hpp"
#include "srcirc/recursion.hpp"

namespace srcirc::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { kPass = 0, kFail = 1, kUndecided = 2, kInputError = 3 };

struct CommandResult {
    int exit_code = kPass;
    Json json;
};

/// Everything a subcommand may need after flag parsing.
struct JobSpec {
    std::string command;
    std::optional<std::string> coeffs;
    std::optional<std::string> file;
    std::string log_q = "2";
    std::optional<std::string> grid;
    bool certify = false;
    std::optional<std::string> z;
    std::optional<std::string> t;
    int n = 1;
    double s = 0.0;
    std::optional<std::string> gamma;
    std::optional<std::string> p1;
    std::optional<std::string> json_path;
    int workers = 0;
};

inline std::vector<std::string> split_list(std::string_view text, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(std::string(detail::trim(cur)));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(std::string(detail::trim(cur)));
    if (out.size() == 1 && out.front().empty()) out.clear();
    return out;
}

inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    for (const auto& item : split_list(text)) out.push_back(parse_rational(item));
    if (out.empty()) throw InputError("empty list");
    return out;
}

inline CoeffVector parse_coeffs(std::string_view text) { return CoeffVector(parse_rational_list(text)); }

inline double parse_double(std::string_view s) {
    const std::string text(detail::trim(s));
    if (text.empty()) throw InputError("empty number");
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || !std::isfinite(v)) throw InputError("malformed number '" + text + "'");
    return v;
}

/// Accepts forms like 3, -0.5, 2i, -i, 1+2i, 1.5-0.25i, 1e-3+2e1i.
inline Complex parse_complex(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s.push_back(ch);
    if (s.empty()) throw InputError("empty complex literal");
    if (s.back() != 'i') return {parse_double(s), 0.0};
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    auto imag_part = [](const std::string& v) {
        if (v.empty() || v == "+") return 1.0;
        if (v == "-") return -1.0;
        return parse_double(v);
    };
    if (split == std::string::npos) return {0.0, imag_part(s)};
    return {parse_double(s.substr(0, split)), imag_part(s.substr(split))};
}

inline std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> out;
    for (const auto& item : split_list(text)) out.push_back(parse_complex(item));
    if (out.empty()) throw InputError("empty z list");
    return out;
}

/// Polynomials from a file: a JSON object {"g": int, "c": [...]}, a JSON
/// array of such objects, or CSV with one coefficient list per line.
inline std::vector<CoeffVector> load_polynomials(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const std::string_view head = detail::trim(text);
    auto from_object = [](const Json& obj) {
        if (!obj.is_object() || !obj.contains("c") || !obj["c"].is_array())
            throw InputError("polynomial object needs a \"c\" array");
        std::vector<Rational> c;
        for (const auto& v : obj["c"]) {
            if (v.is_string()) c.push_back(parse_rational(v.get<std::string>()));
            else if (v.is_number_integer()) c.push_back(Rational(BigInt(v.dump())));
            else throw InputError("coefficients must be \"p/q\" strings or integers");
        }
        CoeffVector cv(std::move(c));
        if (obj.contains("g") && obj["g"].get<int>() != cv.g()) throw InputError("\"g\" does not match the coefficient count");
        return cv;
    };
    std::vector<CoeffVector> out;
    if (!head.empty() && (head.front() == '{' || head.front() == '[')) {
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("malformed JSON: ") + e.what());
        }
        if (doc.is_array())
            for (const auto& item : doc) out.push_back(from_object(item));
        else out.push_back(from_object(doc));
    } else {
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            const std::string_view t = detail::trim(line);
            if (t.empty() || t.front() == '#') continue;
            out.push_back(parse_coeffs(t));
        }
    }
    if (out.empty()) throw InputError("no polynomials in '" + path + "'");
    return out;
}

/// Shortest round-trip decimal; negative zero prints as 0.
inline std::string format_double(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

inline std::string format_complex(Complex z) {
    const double re = z.real(), im = z.imag();
    if (im == 0.0) return format_double(re);
    const std::string mag = std::abs(im) == 1.0 ? "" : format_double(std::abs(im));
    if (re == 0.0) return (im < 0 ? "-" : "") + mag + "i";
    return format_double(re) + (im < 0 ? "-" : "+") + mag + "i";
}

inline Json rational_list(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline Json ext_list(const std::vector<ExtRational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

inline std::string join(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
    return out;
}

inline Json report_json(const DeltaReport& rep) {
    Json out;
    out["g"] = rep.g;
    if (const auto* s = std::get_if<SimpleEmbedding>(&rep.provenance)) out["log_q"] = to_string(s->L);
    if (const auto* o = std::get_if<OmegaEmbedding>(&rep.provenance)) out["t"] = to_string(o->t);
    out["odd_factor"] = to_string(rep.odd_factor);
    Json recs = Json::array();
    for (const auto& r : rep.records)
        recs.push_back({{"n", r.n},
                        {"det_plus", to_string(r.det_plus)},
                        {"det_minus", to_string(r.det_minus)},
                        {"Delta", r.Delta.str()},
                        {"delta", r.delta.str()}});
    out["records"] = std::move(recs);
    return out;
}

inline Json oracle_json(const OracleVerdict& o) {
    Json roots = Json::array();
    for (std::size_t i = 0; i < o.roots.roots.size(); ++i)
        roots.push_back({{"root", format_complex(o.roots.roots[i])},
                         {"deviation", format_double(o.roots.deviation[i])},
                         {"cluster", o.roots.cluster_size[i]}});
    return Json{{"class", to_string(o.roots.cls)},
                {"roots", std::move(roots)},
                {"takagi", {{"dets", rational_list(o.takagi.dets)}, {"pass", o.takagi.pass}}},
                {"takagi_agrees", o.takagi_agrees}};
}

inline Json certificate_json(const SignCertificate& cert) {
    Json out;
    out["class"] = to_string(cert.cls);
    if (cert.witness_n) out["witness_n"] = *cert.witness_n;
    if (cert.witness) out["witness_interval"] = {to_string(cert.witness->first), to_string(cert.witness->second)};
    if (!cert.reason.empty()) out["reason"] = cert.reason;
    Json recs = Json::array();
    for (const auto& r : cert.records)
        recs.push_back({{"n", r.n},
                        {"numerator", r.delta.numerator.str()},
                        {"denominator", r.delta.degenerate ? std::string("0") : r.delta.denominator.str()},
                        {"roots_plus", r.roots_plus},
                        {"roots_minus", r.roots_minus},
                        {"sample_t", to_string(r.sample_t)},
                        {"sample_sign", r.sample_sign}});
    out["records"] = std::move(recs);
    return out;
}

inline int exit_code_for(VerdictClass v) {
    switch (v) {
        case VerdictClass::SimpleOnCircle:
        case VerdictClass::OnCircleNotSimple: return kPass;
        case VerdictClass::OffCircle:
        case VerdictClass::NotSimple: return kFail;
        default: return kUndecided;
    }
}

inline int exit_code_for(CircleClass c) {
    switch (c) {
        case CircleClass::AllSimpleOnT:
        case CircleClass::OnTWithMultiple: return kPass;
        case CircleClass::OffT: return kFail;
        default: return kUndecided;
    }
}

inline int exit_code_for(CertificateClass c) {
    switch (c) {
        case CertificateClass::CertifiedOnT: return kPass;
        case CertificateClass::CertifiedFail: return kFail;
        default: return kUndecided;
    }
}

inline Json coeffs_json(const CoeffVector& c) { return Json{{"g", c.g()}, {"c", rational_list(c.coeffs())}}; }

/// Simple-roots test first; on failure decide on-circle membership by
/// certificate (--certify) or by grid sampling plus the root oracle.
inline CommandResult cmd_check(const CoeffVector& c, const JobSpec& job) {
    const LogScale L(parse_rational(job.log_q));
    const Verdict simple = verdict_simple(c, L);
    const DeltaReport& rep = simple.reports.front();
    Json out = coeffs_json(c);
    out["delta"] = ext_list(rep.deltas());
    out["gamma"] = ext_list(gammas_from_deltas(rep.Deltas()));
    out["simple_test"] = to_string(simple.cls);
    if (simple.witness_n) out["simple_witness_n"] = *simple.witness_n;

    VerdictClass final_cls = VerdictClass::SimpleOnCircle;
    std::optional<bool> certified;
    Json witness;
    if (simple.cls == VerdictClass::SimpleOnCircle) {
        certified = true;
    } else if (job.certify) {
        const SignCertificate cert = certify_on_circle(c);
        out["certificate"] = certificate_json(cert);
        if (cert.cls == CertificateClass::CertifiedOnT) {
            final_cls = VerdictClass::OnCircleNotSimple;
            certified = true;
        } else if (cert.cls == CertificateClass::CertifiedFail) {
            final_cls = VerdictClass::OffCircle;
            certified = true;
            witness["n"] = *cert.witness_n;
            witness["interval"] = {to_string(cert.witness->first), to_string(cert.witness->second)};
        } else {
            final_cls = VerdictClass::Inconclusive;
        }
    } else {
        const std::vector<Rational> grid = job.grid ? parse_rational_list(*job.grid) : default_grid();
        const Verdict sampled = verdict_on_circle_sampled(c, grid);
        out["grid"] = to_string(sampled.cls);
        if (sampled.cls == VerdictClass::OffCircle) {
            final_cls = VerdictClass::OffCircle;
            certified = true;
            witness["n"] = *sampled.witness_n;
            witness["t"] = to_string(*sampled.witness_t);
        } else {
            const OracleVerdict o = verdict_oracle(c);
            out["oracle"] = oracle_json(o);
            certified = false;
            switch (o.roots.cls) {
                case CircleClass::OnTWithMultiple: final_cls = VerdictClass::OnCircleNotSimple; break;
                case CircleClass::OffT: final_cls = VerdictClass::OffCircle; break;
                case CircleClass::AllSimpleOnT:
                case CircleClass::Uncertain: final_cls = VerdictClass::Inconclusive; break;
            }
        }
    }
    if (final_cls != VerdictClass::SimpleOnCircle && simple.cls == VerdictClass::Degenerate &&
        final_cls == VerdictClass::Inconclusive)
        final_cls = VerdictClass::Degenerate;
    if (witness.is_null() && simple.witness_n && final_cls != VerdictClass::OnCircleNotSimple)
        witness["n"] = *simple.witness_n;
    out["verdict"] = to_string(final_cls);
    if (!witness.is_null()) out["witness"] = std::move(witness);
    if (certified) out["certified"] = *certified;
    return {exit_code_for(final_cls), std::move(out)};
}

inline CommandResult cmd_delta(const CoeffVector& c, const JobSpec& job) {
    if (job.t) return {kPass, report_json(delta_omega(c, parse_rational(*job.t)))};
    return {kPass, report_json(delta_simple(c, LogScale(parse_rational(job.log_q))))};
}

inline Json hamiltonian_json(const StepHamiltonian& H) {
    Json steps = Json::array();
    for (const auto& s : H.steps) steps.push_back({{"n", s.n}, {"gamma", to_string(s.gamma)}});
    return Json{{"g", H.g},
                {"log_q", to_string(H.L)},
                {"e0", to_string(H.e0)},
                {"steps", std::move(steps)},
                {"positive_definite", H.positive_definite()}};
}

inline CommandResult cmd_hamiltonian(const CoeffVector& c, const JobSpec& job) {
    return {kPass, hamiltonian_json(hamiltonian(c, LogScale(parse_rational(job.log_q))))};
}

/// (A, B) at the point (n, s) for each z, plus the diagonal kernel K(z, z)
/// off the real axis.
inline CommandResult cmd_eval(const CoeffVector& c, const JobSpec& job) {
    if (!job.z) throw InputError("eval needs --z");
    const LogScale L(parse_rational(job.log_q));
    const auto zs = parse_complex_list(*job.z);
    const StepHamiltonian H = hamiltonian(c, L);
    Json samples = Json::array();
    for (const auto& z : zs) {
        const auto [A, B] = eval_AB(H, z, job.n, job.s);
        Json item{{"z", format_complex(z)}, {"A", format_complex(A)}, {"B", format_complex(B)}};
        if (z.imag() != 0.0) item["K"] = format_complex(kernel_K(H, job.n, job.s, z, z));
        samples.push_back(std::move(item));
    }
    Json out = coeffs_json(c);
    out["log_q"] = to_string(L.value());
    out["n"] = job.n;
    out["s"] = format_double(job.s);
    out["samples"] = std::move(samples);
    return {kPass, std::move(out)};
}

inline CommandResult cmd_reconstruct(const JobSpec& job) {
    if (!job.gamma || !job.p1) throw InputError("reconstruct needs --gamma and --p1");
    const CoeffVector c = reconstruct_polynomial(parse_rational_list(*job.gamma), parse_rational(*job.p1));
    return {kPass, Json{{"g", c.g()}, {"coefficients", join(c.coeffs())}}};
}

inline CommandResult cmd_oracle(const CoeffVector& c, const JobSpec&) {
    const OracleVerdict o = verdict_oracle(c);
    Json out = coeffs_json(c);
    out["oracle"] = oracle_json(o);
    return {exit_code_for(o.roots.cls), std::move(out)};
}

inline CommandResult cmd_certify(const CoeffVector& c, const JobSpec&) {
    const SignCertificate cert = certify_on_circle(c);
    Json out = coeffs_json(c);
    out["certificate"] = certificate_json(cert);
    return {exit_code_for(cert.cls), std::move(out)};
}

inline Json error_json(const std::string& code, const std::string& message) {
    return Json{{"error", {{"code", code}, {"message", message}}}};
}

/// Library errors on well-formed input (a step that cannot be built, a
/// breakdown, an oracle failure) are undecided results; malformed input
/// is an input error.
inline CommandResult run_guarded(const std::function<CommandResult()>& f) {
    try {
        return f();
    } catch (const InputError& e) {
        return {kInputError, error_json(e.code(), e.what())};
    } catch (const Error& e) {
        return {kUndecided, error_json(e.code(), e.what())};
    } catch (const nlohmann::json::exception& e) {
        return {kInputError, error_json("input", e.what())};
    }
}

inline CommandResult dispatch_one(const CoeffVector& c, const JobSpec& job) {
    return run_guarded([&]() -> CommandResult {
        if (job.command == "check") return cmd_check(c, job);
        if (job.command == "delta") return cmd_delta(c, job);
        if (job.command == "hamiltonian") return cmd_hamiltonian(c, job);
        if (job.command == "eval") return cmd_eval(c, job);
        if (job.command == "oracle") return cmd_oracle(c, job);
        if (job.command == "certify") return cmd_certify(c, job);
        throw InputError("unknown command '" + job.command + "'");
    });
}

/// Worker count: explicit flag, else SRCIRC_WORKERS, else hardware
/// concurrency.
inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SRCIRC_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs a subcommand. Batches (--file with several polynomials) are
/// processed concurrently; results keep input order and the exit code is
/// the largest item code.
inline CommandResult run(const JobSpec& job) {
    return run_guarded([&]() -> CommandResult {
        if (job.command == "reconstruct") return cmd_reconstruct(job);
        if (job.coeffs.has_value() == job.file.has_value()) throw InputError("give exactly one of --coeffs and --file");
        if (job.coeffs) return dispatch_one(parse_coeffs(*job.coeffs), job);
        const auto items = load_polynomials(*job.file);
        if (items.size() == 1) return dispatch_one(items.front(), job);
        std::vector<CommandResult> results(items.size());
        std::atomic<std::size_t> next{0};
        const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(resolve_workers(job.workers)), items.size());
        auto worker = [&]() {
            for (std::size_t i = next++; i < items.size(); i = next++) results[i] = dispatch_one(items[i], job);
        };
        std::vector<std::thread> pool;
        for (std::size_t k = 1; k < nthreads; ++k) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
        CommandResult out{kPass, Json::array()};
        for (std::size_t i = 0; i < results.size(); ++i) {
            Json item{{"index", i}, {"exit_code", results[i].exit_code}, {"result", std::move(results[i].json)}};
            out.json.push_back(std::move(item));
            out.exit_code = std::max(out.exit_code, results[i].exit_code);
        }
        return out;
    });
}

}  // namespace srcirc::cli

#endif  // SRCIRC_CLI_HPP
