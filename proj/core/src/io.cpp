#include "ybh/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ybh/errors.hpp"

namespace ybh {

using nlohmann::json;

namespace {

// Column-entry layout of each structure map: (input arity, output arity, index count).
struct Layout {
    const char* key;
    int in;
    int out;
};

constexpr Layout kMu{"mu", 2, 1};
constexpr Layout kR{"R", 2, 2};
constexpr Layout kDelta{"Delta", 1, 2};
constexpr Layout kEta{"eta", 0, 1};
constexpr Layout kEpsilon{"epsilon", 1, 0};
constexpr Layout kS{"S", 1, 1};

[[noreturn]] void shape_error(const std::string& what) { throw ParseError(what); }

FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) shape_error("'field' must be an object with a 'kind'");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind == "prime") {
        if (!j.contains("p") || !j.at("p").is_number_unsigned()) shape_error("prime field needs a positive 'p'");
        return FieldSpec::prime(j.at("p").get<std::uint64_t>());
    }
    shape_error("unknown field kind '" + kind + "'");
}

json field_json(const FieldSpec& k) {
    if (k.is_rational()) return json{{"kind", "rational"}};
    return json{{"kind", "prime"}, {"p", k.characteristic()}};
}

Scalar scalar_from_json(const json& j, const FieldSpec& k) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), k);
    if (j.is_number_integer()) return Scalar::from_int(k, j.get<long>());
    shape_error("coefficients must be strings or integers");
}

std::size_t index_from_json(const json& j, std::size_t dim, const char* key) {
    if (!j.is_number_unsigned()) shape_error(std::string("'") + key + "' indices must be non-negative integers");
    auto v = j.get<std::uint64_t>();
    if (v >= dim)
        throw InputError(std::string("'") + key + "' index " + std::to_string(v) + " out of range for dim " +
                         std::to_string(dim));
    return static_cast<std::size_t>(v);
}

// Entry = input indices, output indices, coefficient.
TensorMap map_from_entries(const json& entries, const Layout& l, std::size_t dim, const FieldSpec& k) {
    if (!entries.is_array()) shape_error(std::string("'") + l.key + "' must be an array of entries");
    TensorMap f(k, dim, l.in, l.out);
    const std::size_t width = static_cast<std::size_t>(l.in + l.out) + 1;
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != width)
            shape_error(std::string("'") + l.key + "' entries must have " + std::to_string(width) + " items");
        std::size_t col = 0, row = 0;
        for (int t = 0; t < l.in; ++t) col = col * dim + index_from_json(e[t], dim, l.key);
        for (int t = 0; t < l.out; ++t) row = row * dim + index_from_json(e[l.in + t], dim, l.key);
        if (!f.at(row, col).is_zero()) throw InputError(std::string("duplicate entry in '") + l.key + "'");
        f.set(row, col, scalar_from_json(e[width - 1], k));
    }
    return f;
}

json entries_from_map(const TensorMap& f) {
    json out = json::array();
    const std::size_t d = f.dim();
    for (std::size_t col = 0; col < f.cols(); ++col)
        for (const auto& e : f.column(col)) {
            json row = json::array();
            for (auto i : decode(col, d, f.in_arity())) row.push_back(i);
            for (auto i : decode(e.row, d, f.out_arity())) row.push_back(i);
            row.push_back(e.value.to_string());
            out.push_back(std::move(row));
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Sorted keys; arrays of arrays get one element per line.
void pretty(const json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + "  " + json(key).dump() + ": ";
            pretty(value, out, indent + 2);
        }
        out += "\n" + pad + "}";
    } else if (j.is_array() && !j.empty() && (j.front().is_array() || j.front().is_object())) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad + "  ";
            pretty(j[i], out, indent + 2);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "]";
    } else {
        out += j.dump();
    }
}

std::string canonical(const json& j) {
    std::string out;
    pretty(j, out, 0);
    out += "\n";
    return out;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
}

AlgebraDocument document_from_json(const json& j, std::optional<FieldSpec> field) {
    if (!j.is_object()) shape_error("document must be a JSON object");
    if (!j.contains("schema") || j.at("schema") != kSchema)
        shape_error("document schema must be \"" + std::string(kSchema) + "\"");
    if (!j.contains("dim") || !j.at("dim").is_number_unsigned() || j.at("dim").get<std::uint64_t>() == 0)
        shape_error("'dim' must be a positive integer");
    AlgebraDocument doc;
    doc.field = field ? *field : field_from_json(j.value("field", json{{"kind", "rational"}}));
    doc.dim = j.at("dim").get<std::size_t>();
    if (j.contains("basis")) {
        if (!j.at("basis").is_array()) shape_error("'basis' must be an array of strings");
        for (const auto& s : j.at("basis")) {
            if (!s.is_string()) shape_error("'basis' must be an array of strings");
            doc.basis.push_back(s.get<std::string>());
        }
        if (doc.basis.size() != doc.dim) throw InputError("'basis' length does not match 'dim'");
    }
    auto read = [&](const Layout& l, std::optional<TensorMap>& slot) {
        if (j.contains(l.key)) slot = map_from_entries(j.at(l.key), l, doc.dim, doc.field);
    };
    read(kMu, doc.mu);
    read(kR, doc.R);
    read(kDelta, doc.delta);
    read(kEta, doc.eta);
    read(kEpsilon, doc.epsilon);
    read(kS, doc.antipode);
    if (j.contains("provenance")) doc.provenance = j.at("provenance").dump();
    return doc;
}

json document_json(const AlgebraDocument& doc) {
    json j;
    j["schema"] = kSchema;
    j["field"] = field_json(doc.field);
    j["dim"] = doc.dim;
    if (!doc.basis.empty()) j["basis"] = doc.basis;
    auto put = [&](const Layout& l, const std::optional<TensorMap>& m) {
        if (m) j[l.key] = entries_from_map(*m);
    };
    put(kMu, doc.mu);
    put(kR, doc.R);
    put(kDelta, doc.delta);
    put(kEta, doc.eta);
    put(kEpsilon, doc.epsilon);
    put(kS, doc.antipode);
    if (!doc.provenance.empty()) j["provenance"] = parse_json(doc.provenance);
    return j;
}

void raise(const CheckResult& c) {
    if (!c.passed) throw ValidationError(c.axiom, c.witness, c.describe());
}

const TensorMap& required(const std::optional<TensorMap>& m, const char* key) {
    if (!m) throw InputError(std::string("document has no '") + key + "'");
    return *m;
}

}  // namespace

AlgebraDocument parse_document(std::string_view text, std::optional<FieldSpec> field) {
    return document_from_json(parse_json(text), field);
}

AlgebraDocument load_document(const std::filesystem::path& path, std::optional<FieldSpec> field) {
    return parse_document(read_file(path), field);
}

std::string dump_document(const AlgebraDocument& doc) { return canonical(document_json(doc)); }

void save_document(const std::filesystem::path& path, const AlgebraDocument& doc) {
    write_file(path, dump_document(doc));
}

AlgebraDocument to_document(const BraidedAlgebra& b, std::string provenance) {
    AlgebraDocument doc;
    doc.field = b.field();
    doc.dim = b.dim();
    doc.basis = b.algebra().labels();
    doc.mu = b.mu();
    doc.R = b.R();
    doc.eta = b.algebra().unit();
    doc.provenance = std::move(provenance);
    return doc;
}

AlgebraDocument to_document(const HopfAlgebra& h, std::string provenance) {
    AlgebraDocument doc;
    doc.field = h.field();
    doc.dim = h.dim();
    doc.basis = h.labels();
    doc.mu = h.mu();
    doc.eta = h.eta();
    doc.delta = h.delta();
    doc.epsilon = h.epsilon();
    doc.antipode = h.antipode();
    doc.provenance = std::move(provenance);
    return doc;
}

BraidedAlgebra braided_from_document(const AlgebraDocument& doc) {
    AssociativeAlgebra alg(required(doc.mu, "mu"), doc.eta, doc.basis);
    raise(check_associative(alg));
    if (alg.unit()) raise(check_unit(alg));
    BraidedAlgebra b(std::move(alg), YangBaxterOperator(required(doc.R, "R")));
    for (const auto& c : check_all(b)) raise(c);
    return b;
}

HopfAlgebra hopf_from_document(const AlgebraDocument& doc) {
    HopfAlgebra h(required(doc.mu, "mu"), required(doc.eta, "eta"), required(doc.delta, "Delta"),
                  required(doc.epsilon, "epsilon"), required(doc.antipode, "S"), doc.basis);
    auto check = check_hopf(h);
    if (!check.passed()) raise(check.violations.front());
    return h;
}

LoadedAlgebra load_algebra(const std::filesystem::path& path, std::optional<FieldSpec> field) {
    auto doc = load_document(path, field);
    if (doc.delta) return hopf_from_document(doc);
    return braided_from_document(doc);
}

std::string dump_series(const DeformationSeries& s) {
    json j = document_json(to_document(s.base));
    j["phi_terms"] = json::array();
    j["psi_terms"] = json::array();
    for (const auto& f : s.phi_terms) j["phi_terms"].push_back(entries_from_map(f));
    for (const auto& f : s.psi_terms) j["psi_terms"].push_back(entries_from_map(f));
    return canonical(j);
}

DeformationSeries parse_series(std::string_view text, std::optional<FieldSpec> field) {
    json j = parse_json(text);
    auto doc = document_from_json(j, field);
    auto base = braided_from_document(doc);
    std::vector<TensorMap> phi, psi;
    for (const auto& [key, layout, out] : {std::tuple{"phi_terms", kR, &phi}, std::tuple{"psi_terms", kMu, &psi}}) {
        if (!j.contains(key) || !j.at(key).is_array()) shape_error(std::string("series needs a '") + key + "' array");
        for (const auto& entries : j.at(key)) out->push_back(map_from_entries(entries, layout, doc.dim, doc.field));
    }
    return DeformationSeries(std::move(base), std::move(phi), std::move(psi));
}

std::string dump_map(const TensorMap& f) {
    json entries = json::array();
    for (std::size_t col = 0; col < f.cols(); ++col)
        for (const auto& e : f.column(col)) entries.push_back(json::array({e.row, col, e.value.to_string()}));
    std::sort(entries.begin(), entries.end());
    json j{{"dim", f.dim()}, {"in_arity", f.in_arity()}, {"out_arity", f.out_arity()}, {"entries", entries}};
    return j.dump();
}

TensorMap parse_map(std::string_view text, const FieldSpec& k) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("in_arity") || !j.contains("out_arity") ||
        !j.contains("entries"))
        shape_error("map needs 'dim', 'in_arity', 'out_arity' and 'entries'");
    TensorMap f(k, j.at("dim").get<std::size_t>(), j.at("in_arity").get<int>(), j.at("out_arity").get<int>());
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3) shape_error("map entries are [row, col, c]");
        auto row = index_from_json(e[0], f.rows(), "entries");
        auto col = index_from_json(e[1], f.cols(), "entries");
        f.set(row, col, scalar_from_json(e[2], k));
    }
    return f;
}

std::string field_to_json(const FieldSpec& k) { return field_json(k).dump(); }

FieldSpec parse_field(std::string_view name, std::optional<std::uint64_t> prime) {
    if (name == "q" || name == "Q" || name == "rational") return FieldSpec::rational();
    if (name == "p" || name == "prime" || name == "fp") {
        if (!prime) throw InputError("prime field needs --prime");
        return FieldSpec::prime(*prime);
    }
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), p);
    if (ec != std::errc() || ptr != name.data() + name.size())
        throw InputError("unknown field '" + std::string(name) + "' (use q, p with --prime, or a prime)");
    return FieldSpec::prime(p);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace ybh
