// egroups: construct, recognize and compare elliptic groups from the shell.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "egroups/errors.hpp"
#include "egroups/json_io.hpp"

#ifndef EGROUPS_VERSION
#define EGROUPS_VERSION "0.0.0"
#endif

using namespace egroups;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kNegative = 1, kBadInput = 2, kSingular = 3, kBadPoint = 4 };

int exit_code(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::SingularCurve: return kSingular;
        case ErrorKind::PointNotOnCurve:
        case ErrorKind::PointAtInfinity: return kBadPoint;
        default: return kBadInput;
    }
}

struct Output {
    std::string path;  // empty: stdout
    std::string format = "csv";  // only consulted by the table commands

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        fs::path target(path);
        if (target.is_relative()) {
            if (const char* dir = std::getenv("EGROUPS_OUT_DIR"); dir && *dir) target = fs::path(dir) / target;
        }
        if (target.has_parent_path()) fs::create_directories(target.parent_path());
        std::ofstream out(target, std::ios::binary);
        if (!out) throw Error(ErrorKind::BadInput, "cannot write " + target.string());
        out << text;
    }
    void write(const Json& j) const { write(j.dump(2) + "\n"); }
};

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::BadInput, "cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadInput, path + ": " + e.what());
    }
}

// "3" is the integer 3 mapped into the field; "1,2" lists coefficients c0, c1.
Fq parse_element(const Field& f, const std::string& s) {
    Json j;
    try {
        j = s.find(',') == std::string::npos ? Json::parse(s) : Json::parse("[" + s + "]");
    } catch (const nlohmann::json::exception&) {
        throw Error(ErrorKind::BadInput, "cannot parse field element \"" + s + "\"");
    }
    return element_from_json(f, j);
}

std::string fixed(double x, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
}

struct CurveArgs {
    std::uint32_t p = 5, e = 1;
    std::vector<std::uint32_t> modulus;
    std::string a = "0", b = "0", x, y;
    bool identity = false;

    void add(CLI::App* cmd) {
        cmd->add_option("--p", p, "Characteristic")->required();
        cmd->add_option("--e", e, "Extension degree");
        cmd->add_option("--modulus", modulus, "Monic modulus coefficients, low to high");
        cmd->add_option("--a", a, "Curve coefficient a")->required();
        cmd->add_option("--b", b, "Curve coefficient b")->required();
        cmd->add_option("--x", x, "Point x");
        cmd->add_option("--y", y, "Point y");
        cmd->add_flag("--infinity", identity, "Use the identity as the point");
    }

    std::pair<EllipticCurve, ECPoint> build() const {
        FieldPtr f = modulus.empty() ? field_make(p, e) : field_make(p, e, modulus);
        EllipticCurve c = curve_make(f, parse_element(*f, a), parse_element(*f, b));
        if (identity || (x.empty() && y.empty())) return {c, ECPoint::identity()};
        if (x.empty() || y.empty()) throw Error(ErrorKind::BadInput, "give both --x and --y");
        ECPoint pt = ECPoint::affine(parse_element(*f, x), parse_element(*f, y));
        if (!on_curve(c, pt)) throw Error(ErrorKind::PointNotOnCurve, "point is not on the curve");
        return {c, pt};
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elliptic groups: construction, recognition and isomorphism testing"};
    app.set_version_flag("--version", std::string("egroups ") + EGROUPS_VERSION + " (schema " +
                                          std::to_string(kSchemaVersion) + ")");
    app.require_subcommand(1);

    Output out;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    auto add_output = [&](CLI::App* cmd, const std::vector<std::string>& formats) {
        cmd->add_option("-o,--output", out.path, "Output file (relative paths resolve under EGROUPS_OUT_DIR)");
        cmd->add_option("--out", out.format, "Output format")->check(CLI::IsMember(formats));
    };

    // construct
    CurveArgs construct_args;
    bool do_scramble = false, do_flatten = false;
    auto* construct = app.add_subcommand("construct", "Emit the matrix of linear forms or its flattened tensor");
    construct_args.add(construct);
    construct->add_flag("--scramble", do_scramble, "Apply a random congruence and substitution (implies --flatten)");
    construct->add_flag("--flatten", do_flatten, "Emit the prime-field tensor");
    construct->add_option("--seed", seed, "Scramble seed");
    add_output(construct, {"json"});

    // recognize
    std::string in1, in2;
    auto* recognize_cmd = app.add_subcommand("recognize", "Recognize an elliptic group tensor");
    recognize_cmd->add_option("tensor", in1, "Tensor or matrix JSON")->required();
    recognize_cmd->add_option("--seed", seed, "Randomization seed");
    add_output(recognize_cmd, {"json"});

    // isotest
    bool no_generators = false;
    auto* isotest = app.add_subcommand("isotest", "Decide isomorphism of two tensors");
    isotest->add_option("first", in1, "First tensor JSON")->required();
    isotest->add_option("second", in2, "Second tensor JSON")->required();
    isotest->add_option("--seed", seed, "Randomization seed");
    isotest->add_flag("--no-generators", no_generators, "Omit automorphism generators");
    add_output(isotest, {"json"});

    // autorder
    CurveArgs order_args;
    auto* autorder = app.add_subcommand("autorder", "Factored order of the automorphism group");
    order_args.add(autorder);
    add_output(autorder, {"json"});

    // count-classes
    std::vector<std::uint64_t> qs;
    auto* count = app.add_subcommand("count-classes", "Count isomorphism classes over GF(q)");
    count->add_option("--q", qs, "Field orders")->required();
    count->add_option("--jobs", jobs, "Worker threads");
    add_output(count, {"csv", "json"});

    // survey-adjoint
    std::vector<std::uint32_t> ps;
    std::size_t samples = 1000;
    auto* survey = app.add_subcommand("survey-adjoint", "Star types of adjoint algebras of random skew matrices");
    survey->add_option("--p", ps, "Primes")->required();
    survey->add_option("--samples", samples, "Accepted samples per prime");
    survey->add_option("--seed", seed, "Sampling seed");
    survey->add_option("--jobs", jobs, "Worker threads");
    add_output(survey, {"csv", "json"});

    // timings
    std::uint64_t qmax = 4000;
    unsigned instances = 3;
    auto* timings = app.add_subcommand("timings", "Median recognition and isomorphism test times");
    timings->add_option("--qmax", qmax, "Largest prime field order");
    timings->add_option("--q", qs, "Explicit field orders (overrides --qmax)");
    timings->add_option("--instances", instances, "Instances per field")->check(CLI::PositiveNumber);
    timings->add_option("--seed", seed, "Instance seed");
    add_output(timings, {"csv"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (*construct) {
            auto [curve, point] = construct_args.build();
            EGroupSpec spec = egroup_make(curve, point);
            if (do_scramble)
                out.write(to_json(scramble(flatten_to_prime(spec.b), seed)));
            else if (do_flatten)
                out.write(to_json(flatten_to_prime(spec.b)));
            else
                out.write(to_json(spec.b));
            return kOk;
        }
        if (*recognize_cmd) {
            RecognitionReport r = recognize(tensor_from_any_json(read_json(in1)), seed);
            out.write(to_json(r));
            return r.status == RecognitionStatus::Elliptic ? kOk : kNegative;
        }
        if (*isotest) {
            IsoCoset c = iso_coset(tensor_from_any_json(read_json(in1)), tensor_from_any_json(read_json(in2)), seed);
            if (no_generators) c.generators.clear();
            out.write(to_json(c));
            return c.isomorphic ? kOk : kNegative;
        }
        if (*autorder) {
            auto [curve, point] = order_args.build();
            out.write(to_json(aut_order(curve, point)));
            return kOk;
        }
        if (*count) {
            std::vector<ClassCount> res;
            for (auto q : qs) res.push_back(count_iso_classes(q, jobs));
            if (out.format == "json") {
                Json arr = Json::array();
                for (const auto& c : res) arr.push_back(to_json(c));
                out.write(res.size() == 1 ? arr[0] : arr);
            } else {
                std::string text = "q,N,valid_pairs\n";
                for (const auto& c : res)
                    text += std::to_string(c.q) + "," + std::to_string(c.classes) + "," +
                            std::to_string(c.valid_pairs) + "\n";
                out.write(text);
            }
            return kOk;
        }
        if (*survey) {
            std::vector<SurveyRow> rows;
            for (auto p : ps) rows.push_back(adjoint_survey(p, samples, seed, jobs));
            if (out.format == "json") {
                Json arr = Json::array();
                for (const auto& r : rows) arr.push_back(to_json(r));
                out.write(rows.size() == 1 ? arr[0] : arr);
            } else {
                std::string text =
                    "p,samples,seed,orthogonal,local_orthogonal,exchange,symplectic,unitary,other,rejected,"
                    "without_decomposition,unitary_without_decomposition,exchange_frac,unitary_frac,"
                    "orthogonal_frac,symplectic_frac\n";
                for (const auto& r : rows) {
                    text += std::to_string(r.p) + "," + std::to_string(r.samples) + "," + std::to_string(r.seed);
                    for (auto n : r.counts) text += "," + std::to_string(n);
                    text += "," + std::to_string(r.rejected) + "," + std::to_string(r.without_decomposition) + "," +
                            std::to_string(r.unitary_without_decomposition);
                    text += "," + fixed(r.fraction(StarType::Exchange), 4) + "," +
                            fixed(r.fraction(StarType::Unitary1), 4) + "," + fixed(r.orthogonal_fraction(), 4) +
                            "," + fixed(r.fraction(StarType::Symplectic2), 4) + "\n";
                }
                out.write(text);
            }
            return kOk;
        }
        if (*timings) {
            auto rows = timing_harness(qs.empty() ? timing_sizes(qmax) : qs, seed, instances);
            std::string text = std::string(kTimingCsvHeader) + "\n";
            for (const auto& r : rows)
                text += std::to_string(r.q) + "," + fixed(r.recognize_ms, 3) + "," + fixed(r.isotest_ms, 3) + "\n";
            out.write(text);
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "egroups: " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "egroups: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
