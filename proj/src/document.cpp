#include "hypack/document.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace hypack {

using ojson = nlohmann::ordered_json;

std::string format17(double x) {
    if (!std::isfinite(x)) throw std::domain_error("cannot format a non-finite number");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s = buf;
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

namespace {

void dump_rec(const ojson& j, int indent, int depth, std::string& out) {
    auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case ojson::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += ojson(it.key()).dump();
                out += indent < 0 ? ":" : ": ";
                dump_rec(it.value(), indent, depth + 1, out);
            }
            newline(depth);
            out += '}';
            return;
        }
        case ojson::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            for (size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                newline(depth + 1);
                dump_rec(j[i], indent, depth + 1, out);
            }
            newline(depth);
            out += ']';
            return;
        }
        case ojson::value_t::number_float: out += format17(j.get<double>()); return;
        default: out += j.dump(); return;
    }
}

void only_keys(const ojson& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) throw DocumentError(where + " must be an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!ok.count(it.key())) throw DocumentError("unknown field '" + it.key() + "' in " + where);
    for (const char* k : allowed)
        if (!j.contains(k)) throw DocumentError("missing field '" + std::string(k) + "' in " + where);
}

int get_int(const ojson& j, const std::string& where) {
    if (!j.is_number_integer()) throw DocumentError(where + " must be an integer");
    return j.get<int>();
}

Slot get_slot(const ojson& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw DocumentError(where + " must be [triangle, side]");
    return {get_int(j[0], where), get_int(j[1], where)};
}

}  // namespace

std::string dump17(const ojson& j, int indent) {
    std::string out;
    dump_rec(j, indent, 0, out);
    return out;
}

std::string serialize(const ComplexDocument& doc) {
    ojson j;
    j["schema_version"] = doc.schema_version;
    ojson tris = ojson::array();
    const auto& c = doc.complex;
    for (int t = 0; t < c.triangle_count(); ++t)
        tris.push_back({{"id", t}, {"marked", c.is_marked(t)}, {"marked_corner", c.marked_corner(t)}});
    j["triangles"] = std::move(tris);
    ojson ps = ojson::array();
    for (const auto& p : c.pairings())
        ps.push_back({{"a", {p.a.tri, p.a.side}}, {"b", {p.b.tri, p.b.side}}, {"reversed", p.reversed}});
    j["pairings"] = std::move(ps);
    j["metadata"] = doc.metadata.is_null() ? ojson::object() : doc.metadata;
    return dump17(j) + "\n";
}

ComplexDocument parse_document(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw DocumentError(std::string("malformed JSON: ") + e.what());
    }
    only_keys(j, {"schema_version", "triangles", "pairings", "metadata"}, "document");
    ComplexDocument doc;
    if (!j["schema_version"].is_string() || j["schema_version"].get<std::string>() != kSchemaVersion)
        throw DocumentError("unsupported schema_version");
    if (!j["triangles"].is_array()) throw DocumentError("triangles must be an array");
    if (!j["pairings"].is_array()) throw DocumentError("pairings must be an array");
    if (!j["metadata"].is_object()) throw DocumentError("metadata must be an object");

    std::vector<int> marked;
    for (const auto& t : j["triangles"]) {
        only_keys(t, {"id", "marked", "marked_corner"}, "triangle");
        int id = get_int(t["id"], "triangle id");
        if (id != static_cast<int>(marked.size())) throw DocumentError("triangle ids must be 0, 1, 2, ... in order");
        if (!t["marked"].is_boolean()) throw DocumentError("triangle marked must be a boolean");
        int mc = get_int(t["marked_corner"], "marked_corner");
        if (t["marked"].get<bool>() != (mc >= 0)) throw DocumentError("marked and marked_corner disagree");
        marked.push_back(mc);
    }
    std::vector<Pairing> ps;
    for (const auto& p : j["pairings"]) {
        only_keys(p, {"a", "b", "reversed"}, "pairing");
        if (!p["reversed"].is_boolean()) throw DocumentError("pairing reversed must be a boolean");
        ps.push_back({get_slot(p["a"], "pairing a"), get_slot(p["b"], "pairing b"), p["reversed"].get<bool>()});
    }
    try {
        const int count = static_cast<int>(marked.size());
        doc.complex = TriangulatedComplex(count, std::move(ps), std::move(marked));
    } catch (const std::invalid_argument& e) {
        throw DocumentError(std::string("invalid complex: ") + e.what());
    }
    doc.metadata = j["metadata"];
    return doc;
}

ojson to_json(const AssemblyCertificate& c) {
    ojson v = ojson::array();
    for (const auto& r : c.vertices) v.push_back({{"vertex", r.vertex}, {"i", r.i}, {"j", r.j}});
    return {{"ok", c.ok},
            {"i", c.i},
            {"j", c.j},
            {"vertices", v},
            {"valences_ok", c.valences_ok},
            {"chi_ok", c.chi_ok},
            {"triangles_ok", c.triangles_ok},
            {"connected", c.connected},
            {"orientability_ok", c.orientability_ok},
            {"marked_ok", c.marked_ok},
            {"closed", c.closed},
            {"defects", c.defects}};
}

ojson to_json(const GeometricCertificate& c) {
    ojson v = ojson::array();
    for (const auto& a : c.vertices)
        v.push_back({{"vertex", a.vertex}, {"i", a.i}, {"j", a.j}, {"angle_sum", a.angle_sum}});
    return {{"ok", c.ok},
            {"r", c.r},
            {"edge_length", c.edge_length},
            {"equilateral", c.equilateral},
            {"horocyclic", c.horocyclic},
            {"max_angle_defect", c.max_angle_defect},
            {"area_residual", c.area_residual},
            {"density", c.density},
            {"vertices", v},
            {"defects", c.defects}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) {
            out.close();
            fs::remove(tmp);
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, target);
}

}  // namespace hypack
