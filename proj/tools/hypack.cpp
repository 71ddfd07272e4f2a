#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "hypack/assembler.hpp"
#include "hypack/bounds.hpp"
#include "hypack/document.hpp"
#include "hypack/geometry.hpp"
#include "hypack/hyptrig.hpp"
#include "hypack/strip.hpp"

using namespace hypack;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kInternal = 3 };

struct Failure {
    int code;
    std::string message;
};

ojson bound_record(int chi, int n, int k) {
    BoundReport r = report({chi, n}, k);
    double density = k * disk_area(r.r_vor) / surface_area(chi);
    return {{"chi", chi},         {"n", n},
            {"k", k},             {"r_naive", r.r_naive},
            {"r_boroczky", r.r_boroczky}, {"r_vor", r.r_vor},
            {"i", r.i.str()},     {"j", r.j.str()},
            {"density", density}, {"attainability", to_string(r.attainability)}};
}

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw std::invalid_argument("--sweep-k expects A..B");
    int a = 0, b = 0;
    try {
        size_t used = 0;
        a = std::stoi(s.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument("");
        std::string rest = s.substr(dots + 2);
        b = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("--sweep-k expects A..B with integers A and B");
    }
    if (a < 1 || b < a) throw std::invalid_argument("--sweep-k needs 1 <= A <= B");
    return {a, b};
}

int cmd_bounds(int chi, int n, std::optional<int> k, const std::string& sweep, const std::string& format) {
    if (auto why = signature_problem({chi, n}); !why.empty()) throw std::invalid_argument(why);
    int lo = 0, hi = 0;
    if (!sweep.empty()) {
        std::tie(lo, hi) = parse_range(sweep);
    } else if (k) {
        if (*k < 1) throw std::invalid_argument("k must be positive");
        lo = hi = *k;
    } else {
        throw std::invalid_argument("bounds needs --k or --sweep-k");
    }
    ojson rows = ojson::array();
    for (int kk = lo; kk <= hi; ++kk) rows.push_back(bound_record(chi, n, kk));
    if (format == "json") {
        std::cout << dump17(sweep.empty() ? rows[0] : rows) << "\n";
        return kOk;
    }
    auto cell = [](const ojson& v) { return v.is_string() ? v.get<std::string>() : dump17(v, -1); };
    std::string header;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) header += (header.empty() ? "" : ",") + it.key();
    std::cout << header << "\n";
    for (const auto& row : rows) {
        std::string line;
        for (auto it = row.begin(); it != row.end(); ++it) line += (line.empty() ? "" : ",") + cell(*it);
        std::cout << line << "\n";
    }
    return kOk;
}

int cmd_construct(const AssemblyRequest& req, const std::string& out) {
    AssemblyResult res;
    try {
        res = marked_surface(req);
    } catch (const InadmissibleRequest&) {
        throw;
    } catch (const std::exception& e) {
        throw Failure{kInternal, std::string("construction failed: ") + e.what()};
    }
    if (!res.certificate.ok) throw Failure{kInternal, "assembly certificate failed: " + res.certificate.defects.front()};
    GeometricCertificate geo = certify_geometry(res.complex, {req.chi, req.n}, req.k);
    if (!geo.ok) throw Failure{kInternal, "geometric certificate failed: " + geo.defects.front()};
    ComplexDocument doc;
    doc.complex = res.complex;
    doc.metadata["request"] = {{"chi", req.chi}, {"n", req.n}, {"k", req.k}, {"orientable", req.orientable}};
    doc.metadata["assembly"] = to_json(res.certificate);
    doc.metadata["geometry"] = to_json(geo);
    write_file_atomic(out, serialize(doc));
    std::cout << "wrote " << out << ": " << res.complex.triangle_count() << " triangles, i=" << res.certificate.i
              << ", j=" << res.certificate.j << "\n";
    return kOk;
}

int cmd_verify(const std::string& in, int chi, int n, int k) {
    if (auto why = signature_problem({chi, n}); !why.empty()) throw std::invalid_argument(why);
    if (k < 1) throw std::invalid_argument("k must be positive");
    std::string text;
    try {
        text = read_file(in);
    } catch (const std::exception& e) {
        throw std::invalid_argument(e.what());
    }
    ComplexDocument doc = parse_document(text);
    ojson rep;
    std::vector<std::string> defects;
    try {
        const auto& c = doc.complex;
        AssemblyRequest req{chi, n, k, c.triangle_count() == 0 || !connected(c) || orientability(c)};
        auto ac = certify_assembly(c, req);
        auto gc = certify_geometry(c, {chi, n}, k);
        defects = ac.defects;
        defects.insert(defects.end(), gc.defects.begin(), gc.defects.end());
        rep["assembly"] = to_json(ac);
        rep["geometry"] = to_json(gc);
    } catch (const std::logic_error& e) {
        defects.push_back(e.what());
    }
    ojson out;
    out["ok"] = defects.empty();
    out["defects"] = defects;
    for (auto it = rep.begin(); it != rep.end(); ++it) out[it.key()] = it.value();
    std::cout << dump17(out) << "\n";
    return defects.empty() ? kOk : kVerifyFailed;
}

struct StripArgs {
    double delta = 0, h = 0, a = 0, b = 0;
    std::optional<double> eps, solve;
    int trace = 0;
};

int cmd_strip(bool separating, const StripArgs& s) {
    auto length = [&](double e) {
        return separating ? sep_length({s.a, s.b, s.h, e}) : nonsep_length({s.delta, s.h, e});
    };
    if (s.solve) {
        double e = separating ? solve_eps(*s.solve, SepParams{s.a, s.b, s.h, 0})
                              : solve_eps(*s.solve, NonSepParams{s.delta, s.h, 0});
        std::cout << "target,eps,residual\n"
                  << format17(*s.solve) << "," << format17(e) << "," << format17(length(e) - *s.solve) << "\n";
        return kOk;
    }
    if (s.trace > 0) {
        double top = s.eps ? *s.eps : 2 * phase_transition(s.h);
        if (!(top > 0)) throw std::domain_error("--eps must be positive");
        std::cout << "eps,length\n";
        for (int i = 1; i <= s.trace; ++i) {
            double e = top * i / s.trace;
            std::cout << format17(e) << "," << format17(length(e)) << "\n";
        }
        return kOk;
    }
    if (!s.eps) throw std::invalid_argument("strip needs --eps, --trace or --solve");
    std::cout << "eps,length\n" << format17(*s.eps) << "," << format17(length(*s.eps)) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extremal disk packings on hyperbolic surfaces"};
    app.require_subcommand(1);

    int chi = 0, n = 0, k = 0;
    std::string sweep, format = "csv", path;
    bool orientable = false;

    auto* bounds = app.add_subcommand("bounds", "Radius bounds for k disks");
    bounds->add_option("--chi", chi, "Euler characteristic")->required();
    bounds->add_option("--n", n, "number of cusps");
    auto* bounds_k = bounds->add_option("--k", k, "number of disks");
    bounds->add_option("--sweep-k", sweep, "range A..B of k");
    bounds->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* construct = app.add_subcommand("construct", "Build a surface realizing the bound");
    construct->add_option("--chi", chi)->required();
    construct->add_option("--n", n);
    construct->add_option("--k", k)->required();
    construct->add_flag("--orientable", orientable);
    construct->add_option("--out", path)->required();

    auto* verify = app.add_subcommand("verify", "Check a stored surface");
    verify->add_option("--in", path)->required();
    verify->add_option("--chi", chi)->required();
    verify->add_option("--n", n);
    verify->add_option("--k", k)->required();

    auto* strip = app.add_subcommand("strip", "Geodesic lengths across a strip");
    strip->require_subcommand(1);
    StripArgs sa;
    auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "Print this help message and exit");
        sub->add_option("--h", sa.h, "strip height")->required();
        sub->add_option("--eps", sa.eps, "strip width");
        sub->add_option("--trace", sa.trace, "number of samples");
        sub->add_option("--solve", sa.solve, "target length");
    };
    auto* nonsep = strip->add_subcommand("nonsep", "non-separating case");
    nonsep->add_option("--delta", sa.delta)->required();
    add_common(nonsep);
    auto* sep = strip->add_subcommand("sep", "separating case");
    sep->add_option("--a", sa.a)->required();
    sep->add_option("--b", sa.b)->required();
    add_common(sep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (*bounds) return cmd_bounds(chi, n, bounds_k->count() ? std::optional<int>(k) : std::nullopt, sweep, format);
        if (*construct) return cmd_construct({chi, n, k, orientable}, path);
        if (*verify) return cmd_verify(path, chi, n, k);
        if (*strip) return cmd_strip(static_cast<bool>(*sep), sa);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
