#include "fusionobs/ring_json.hpp"

#include <sstream>

namespace fusionobs::io {

namespace {

std::string joined(const FusionRing& ring, std::span<const Element> tuple) {
    std::string key;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) key += ',';
        key += ring.name(tuple[i]);
    }
    return key;
}

std::optional<std::size_t> index_of(const std::vector<std::string>& names, const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    return std::nullopt;
}

std::size_t require_name(const std::vector<std::string>& names, const std::string& name) {
    auto i = index_of(names, name);
    if (!i) throw ParseError("unknown element name \"" + name + "\"");
    return *i;
}

// Splits "a,b,.." into `count` element names; names never contain ','.
std::vector<std::size_t> split_key(const std::vector<std::string>& names, const std::string& key, std::size_t count) {
    std::vector<std::size_t> out;
    if (count == 0) {
        if (!key.empty()) throw ParseError("expected empty key for degree 0, got \"" + key + "\"");
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = key.find(',', start);
        out.push_back(require_name(names, key.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != count)
        throw ParseError("key \"" + key + "\" should name " + std::to_string(count) + " elements");
    return out;
}

std::int64_t require_int(const Json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
    return v.get<std::int64_t>();
}

} // namespace

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

RawRing raw_ring_from_json(const Json& doc) {
    if (!doc.is_object()) throw ParseError("ring: expected an object");
    if (!doc.contains("names") || !doc["names"].is_array()) throw ParseError("ring: \"names\" must be an array");
    RawRing raw;
    for (const auto& n : doc["names"]) {
        if (!n.is_string()) throw ParseError("ring: names must be strings");
        raw.names.push_back(n.get<std::string>());
    }
    const std::size_t r = raw.rank();
    raw.table.assign(r * r * r, 0);
    if (doc.contains("identity") && !doc["identity"].is_null()) {
        if (!doc["identity"].is_string()) throw ParseError("ring: \"identity\" must be a name or null");
        raw.identity = require_name(raw.names, doc["identity"].get<std::string>());
    }
    if (!doc.contains("table")) throw ParseError("ring: missing \"table\"");
    if (!doc["table"].is_object()) throw ParseError("ring: \"table\" must be an object");
    for (const auto& [key, products] : doc["table"].items()) {
        const auto pair = split_key(raw.names, key, 2);
        if (!products.is_object()) throw ParseError("ring: table[\"" + key + "\"] must be an object");
        for (const auto& [out, value] : products.items()) {
            const auto k = require_name(raw.names, out);
            raw.table[(pair[0] * r + pair[1]) * r + k] = require_int(value, "ring: table[\"" + key + "\"][\"" + out + "\"]");
        }
    }
    return raw;
}

FusionRing ring_from_json(const Json& doc) {
    auto raw = raw_ring_from_json(doc);
    auto report = validate_fusion_ring(raw);
    if (!report.ok()) throw InvalidRing(std::move(report));
    return FusionRing(normalize_identity(raw).first);
}

Json raw_ring_to_json(const RawRing& raw) {
    const std::size_t r = raw.rank();
    Json doc;
    doc["names"] = raw.names;
    doc["identity"] = raw.identity ? Json(raw.names.at(*raw.identity)) : Json(nullptr);
    Json table = Json::object();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Json products = Json::object();
            for (std::size_t k = 0; k < r; ++k) {
                const auto v = raw.table.at((i * r + j) * r + k);
                if (v != 0) products[raw.names[k]] = v;
            }
            if (!products.empty()) table[raw.names[i] + "," + raw.names[j]] = std::move(products);
        }
    doc["table"] = std::move(table);
    return doc;
}

Json ring_to_json(const FusionRing& ring) { return raw_ring_to_json(ring.raw()); }

Json cochain_to_json(const hochschild::Cochain& c) {
    const auto& ring = c.ring();
    Json values = Json::object();
    for (std::size_t t = 0; t < c.tuples(); ++t) {
        const auto tuple = c.tuple_at(t);
        Json comp = Json::object();
        for (Element s = 0; s < ring.rank(); ++s) comp[ring.name(s)] = c.get(tuple, s) ? 1 : 0;
        values[joined(ring, tuple)] = std::move(comp);
    }
    Json doc;
    doc["degree"] = c.degree();
    doc["values"] = std::move(values);
    return doc;
}

hochschild::Cochain cochain_from_json(const FusionRing& ring, const Json& doc) {
    if (!doc.is_object() || !doc.contains("degree") || !doc.contains("values"))
        throw ParseError("cochain: expected {\"degree\", \"values\"}");
    const auto degree = require_int(doc["degree"], "cochain: degree");
    if (degree < 0) throw ParseError("cochain: negative degree");
    hochschild::Cochain c(ring, static_cast<std::size_t>(degree));
    if (!doc["values"].is_object()) throw ParseError("cochain: \"values\" must be an object");
    for (const auto& [key, comp] : doc["values"].items()) {
        const auto tuple = split_key(ring.names(), key, c.degree());
        if (!comp.is_object()) throw ParseError("cochain: values[\"" + key + "\"] must be an object");
        for (const auto& [name, bit] : comp.items()) {
            const auto v = require_int(bit, "cochain: values[\"" + key + "\"]");
            if (v != 0 && v != 1) throw ParseError("cochain: bits must be 0 or 1");
            c.set(tuple, require_name(ring.names(), name), v == 1);
        }
    }
    return c;
}

Json alpha_to_json(const hochschild::Cochain& alpha) { return cochain_to_json(alpha)["values"]; }

Json cocycle_report(const FusionRing& ring, const obstruction::ObstructionCocycle& cocycle, bool cocycle_checked) {
    Json doc;
    doc["ring"] = ring_to_json(ring);
    doc["alpha"] = alpha_to_json(cocycle.alpha);
    doc["cocycle_checked"] = cocycle_checked;
    doc["oracle_checked"] = cocycle.oracle_checked;
    return doc;
}

Json cohomology_report(const FusionRing& ring, std::size_t degree, std::size_t dim, bool alpha_trivial,
                       const std::optional<hochschild::Cochain>& witness) {
    Json doc;
    doc["ring"] = ring_to_json(ring);
    doc["degree"] = degree;
    doc["dim"] = dim;
    doc["alpha_trivial"] = alpha_trivial;
    doc["witness"] = witness ? cochain_to_json(*witness) : Json(nullptr);
    return doc;
}

Json matrix_to_json(const pentagon::ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(pentagon::format_rational(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

pentagon::ExactMatrix matrix_from_json(const Json& doc) {
    if (!doc.is_array()) throw ParseError("matrix: expected an array of rows");
    std::vector<std::vector<pentagon::Rational>> rows;
    for (const auto& row : doc) {
        if (!row.is_array()) throw ParseError("matrix: rows must be arrays");
        if (row.size() != doc.size()) throw ParseError("matrix: not square");
        auto& out = rows.emplace_back();
        for (const auto& entry : row) {
            if (!entry.is_string()) throw ParseError("matrix: entries must be \"p/q\" strings");
            try {
                out.push_back(pentagon::parse_rational(entry.get<std::string>()));
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("matrix: ") + e.what());
            }
        }
    }
    return pentagon::ExactMatrix::from_rows(rows);
}

Json group_to_json(const pentagon::GroupTable& g) {
    Json doc;
    doc["order"] = g.order();
    doc["table"] = g.table();
    return doc;
}

pentagon::GroupTable group_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("order") || !doc.contains("table"))
        throw ParseError("group: expected {\"order\", \"table\"}");
    const auto order = require_int(doc["order"], "group: order");
    if (!doc["table"].is_array()) throw ParseError("group: table must be an array");
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : doc["table"]) {
        if (!row.is_array()) throw ParseError("group: rows must be arrays");
        auto& out = table.emplace_back();
        for (const auto& v : row) {
            const auto x = require_int(v, "group: table entry");
            if (x < 0) throw ParseError("group: negative table entry");
            out.push_back(static_cast<std::size_t>(x));
        }
    }
    if (order < 0 || static_cast<std::size_t>(order) != table.size())
        throw ParseError("group: order does not match the table");
    try {
        return pentagon::GroupTable(std::move(table));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("group: ") + e.what());
    }
}

} // namespace fusionobs::io
