// Copyright 2026 The gbslxe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbslxe/io.hpp"

#include <cmath>
#include <cstdio>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gbslxe {

using nlohmann::json;

namespace {

[[noreturn]] void fail_parse(const std::string &msg) { throw Error(ErrorCode::Parse, msg); }

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        fail_parse(std::string("malformed JSON: ") + e.what());
    }
}

const json &field(const json &obj, const char *name) {
    if (!obj.is_object()) {
        fail_parse("expected a JSON object");
    }
    auto it = obj.find(name);
    if (it == obj.end()) {
        fail_parse(std::string("missing field '") + name + "'");
    }
    return *it;
}

int int_field(const json &obj, const char *name) {
    const json &v = field(obj, name);
    if (!v.is_number_integer()) {
        fail_parse(std::string("field '") + name + "' must be an integer");
    }
    return v.get<int>();
}

void check_format(const json &doc, const char *format) {
    const json &f = field(doc, "format");
    if (!f.is_string() || f.get<std::string>() != format) {
        fail_parse(std::string("field 'format' must be \"") + format + "\"");
    }
    int version = int_field(doc, "version");
    if (version != kFormatVersion) {
        fail_parse("unsupported format version " + std::to_string(version));
    }
}

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Renders a double with %.17g so the text form is stable across platforms and
// reads back to the same bits.
json number17(double x) {
    if (!std::isfinite(x)) {
        return x > 0 ? json("inf") : (x < 0 ? json("-inf") : json("nan"));
    }
    return json::parse(g17(x));
}

double read_number(const json &v, const std::string &where) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        const auto &s = v.get_ref<const std::string &>();
        if (s == "inf") {
            return INFINITY;
        }
        if (s == "-inf") {
            return -INFINITY;
        }
    }
    fail_parse(where + " must be a number");
}

std::string meta_value(const json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string rational_num(const Rational &q) { return boost::multiprecision::numerator(q).str(); }
std::string rational_den(const Rational &q) { return boost::multiprecision::denominator(q).str(); }

json rational_json(const Rational &q) { return json{{"num", rational_num(q)}, {"den", rational_den(q)}}; }

Rational rational_from(const json &v, const std::string &where) {
    try {
        BigInt num(field(v, "num").get<std::string>());
        BigInt den(field(v, "den").get<std::string>());
        if (den == 0) {
            fail_parse(where + " has a zero denominator");
        }
        return Rational(num, den);
    } catch (const Error &) {
        throw;
    } catch (const std::exception &) {
        fail_parse(where + " is not a valid rational");
    }
}

BigInt bigint_from(const json &v, const std::string &where) {
    try {
        return BigInt(v.get<std::string>());
    } catch (const std::exception &) {
        fail_parse(where + " is not a valid integer string");
    }
}

}  // namespace

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file_atomic(const std::string &path, const std::string &content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::Io, "cannot open '" + tmp + "' for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            throw Error(ErrorCode::Io, "write to '" + tmp + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorCode::Io, "cannot move '" + tmp + "' to '" + path + "'");
    }
}

std::string unitary_to_json(const UnitaryMatrix &u) {
    // Built by hand so each entry keeps exactly the %.17g text.
    std::ostringstream out;
    const CMatrix &e = u.entries();
    out << "{\n  \"m\": " << u.modes() << ",\n  \"entries\": [";
    for (Eigen::Index r = 0; r < e.rows(); ++r) {
        for (Eigen::Index c = 0; c < e.cols(); ++c) {
            out << (r == 0 && c == 0 ? "\n    " : ",\n    ") << '[' << g17(e(r, c).real()) << ", "
                << g17(e(r, c).imag()) << ']';
        }
    }
    out << "\n  ]\n}\n";
    return out.str();
}

CMatrix matrix_from_json(const std::string &text) {
    json doc = parse_json(text);
    int m = int_field(doc, "m");
    if (m < 1) {
        fail_parse("field 'm' must be positive");
    }
    const json &entries = field(doc, "entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m)) {
        fail_parse("field 'entries' must hold m*m = " + std::to_string(m * m) + " [re, im] pairs");
    }
    CMatrix out(m, m);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const json &pair = entries[i];
        std::string where = "entries[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2) {
            fail_parse(where + " must be a [re, im] pair");
        }
        double re = read_number(pair[0], where + "[0]");
        double im = read_number(pair[1], where + "[1]");
        out(static_cast<Eigen::Index>(i) / m, static_cast<Eigen::Index>(i) % m) = Complex(re, im);
    }
    return out;
}

UnitaryMatrix unitary_from_json(const std::string &text) { return UnitaryMatrix(matrix_from_json(text)); }

std::string samples_to_json(const SampleSet &set) {
    json doc;
    doc["format"] = kSampleFormat;
    doc["version"] = kFormatVersion;
    doc["m"] = set.modes;
    if (set.unitary_ref) {
        doc["unitary_ref"] = *set.unitary_ref;
    }
    doc["samples"] = set.samples;
    doc["meta"] = set.meta;
    return doc.dump(1) + "\n";
}

SampleSet samples_from_json(const std::string &text) {
    json doc = parse_json(text);
    check_format(doc, kSampleFormat);
    SampleSet set;
    set.modes = int_field(doc, "m");
    if (doc.contains("unitary_ref")) {
        const json &ref = doc["unitary_ref"];
        if (!ref.is_string()) {
            fail_parse("field 'unitary_ref' must be a string");
        }
        set.unitary_ref = ref.get<std::string>();
    }
    const json &samples = field(doc, "samples");
    if (!samples.is_array()) {
        fail_parse("field 'samples' must be an array");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const json &s = samples[i];
        std::string where = "samples[" + std::to_string(i) + "]";
        if (!s.is_array()) {
            fail_parse(where + " must be an array of counts");
        }
        DetectionPattern p;
        for (const auto &c : s) {
            if (!c.is_number_integer() || c.get<long long>() < 0) {
                fail_parse(where + " must contain non-negative integers");
            }
            p.push_back(c.get<int>());
        }
        if (static_cast<int>(p.size()) != set.modes) {
            fail_parse(where + " has length " + std::to_string(p.size()) + ", expected m = " +
                       std::to_string(set.modes));
        }
        set.samples.push_back(std::move(p));
    }
    if (doc.contains("meta")) {
        const json &meta = doc["meta"];
        if (!meta.is_object()) {
            fail_parse("field 'meta' must be an object");
        }
        for (auto it = meta.begin(); it != meta.end(); ++it) {
            set.meta[it.key()] = meta_value(it.value());
        }
    }
    return set;
}

std::string reports_to_json(const std::vector<ScoreReport> &reports) {
    json doc;
    doc["format"] = kReportFormat;
    doc["version"] = kFormatVersion;
    doc["tool_version"] = kVersion;
    json list = json::array();
    for (const auto &r : reports) {
        json item;
        item["sector"] = r.sector;
        item["value"] = number17(r.value);
        item["std_error"] = number17(r.std_error);
        item["method"] = to_string(r.method);
        item["digest"] = r.digest;
        item["version"] = r.version;
        item["seeds"] = r.seeds;
        item["meta"] = r.meta;
        list.push_back(std::move(item));
    }
    doc["reports"] = std::move(list);
    return doc.dump(1) + "\n";
}

std::string coefficients_to_json(const std::vector<CoefficientTable> &tables) {
    json doc;
    doc["format"] = kCacheFormat;
    doc["version"] = kFormatVersion;
    json entries = json::object();
    for (const auto &t : tables) {
        json entry;
        json c = json::array();
        for (std::size_t len = 1; len < t.c.size(); ++len) {
            c.push_back(rational_json(t.c[len]));
        }
        entry["c"] = std::move(c);
        json rows = json::array();
        for (const auto &row : t.rows) {
            json jr;
            jr["k"] = row.k.parts();
            jr["l"] = row.l.parts();
            jr["v"] = rational_json(row.v);
            jr["hash_b"] = row.hash_b.str();
            jr["product"] = rational_json(row.product);
            json hist = json::array();
            for (std::size_t len = 1; len < row.b_by_length.size(); ++len) {
                hist.push_back(row.b_by_length[len].str());
            }
            jr["b_by_length"] = std::move(hist);
            rows.push_back(std::move(jr));
        }
        entry["rows"] = std::move(rows);
        entries[std::to_string(t.half_size)] = std::move(entry);
    }
    doc["tables"] = std::move(entries);
    return doc.dump(1) + "\n";
}

std::vector<CoefficientTable> coefficients_from_json(const std::string &text) {
    json doc = parse_json(text);
    check_format(doc, kCacheFormat);
    const json &tables = field(doc, "tables");
    if (!tables.is_object()) {
        fail_parse("field 'tables' must be an object keyed by N");
    }
    std::vector<CoefficientTable> out;
    for (auto it = tables.begin(); it != tables.end(); ++it) {
        CoefficientTable t;
        try {
            t.half_size = std::stoi(it.key());
        } catch (const std::exception &) {
            fail_parse("table key '" + it.key() + "' is not an integer");
        }
        const std::string where = "tables." + it.key();
        const json &c = field(it.value(), "c");
        if (!c.is_array() || c.size() != static_cast<std::size_t>(2 * t.half_size)) {
            fail_parse(where + ".c must list 2N rationals");
        }
        t.c.push_back(Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            t.c.push_back(rational_from(c[i], where + ".c[" + std::to_string(i) + "]"));
        }
        const json &rows = field(it.value(), "rows");
        if (!rows.is_array()) {
            fail_parse(where + ".rows must be an array");
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const json &jr = rows[i];
            std::string rw = where + ".rows[" + std::to_string(i) + "]";
            TableRow row;
            try {
                row.k = ConstrainedComposition(field(jr, "k").get<std::vector<int>>());
                row.l = ConstrainedComposition(field(jr, "l").get<std::vector<int>>());
            } catch (const Error &e) {
                if (e.code() == ErrorCode::Parse) {
                    throw;
                }
                fail_parse(rw + ": " + e.what());
            } catch (const json::exception &) {
                fail_parse(rw + ": k and l must be integer arrays");
            }
            row.v = rational_from(field(jr, "v"), rw + ".v");
            row.hash_b = bigint_from(field(jr, "hash_b"), rw + ".hash_b");
            row.product = rational_from(field(jr, "product"), rw + ".product");
            row.b_by_length.push_back(BigInt(0));
            const json &hist = field(jr, "b_by_length");
            if (!hist.is_array()) {
                fail_parse(rw + ".b_by_length must be an array");
            }
            for (const auto &h : hist) {
                row.b_by_length.push_back(bigint_from(h, rw + ".b_by_length"));
            }
            t.rows.push_back(std::move(row));
        }
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.half_size < b.half_size; });
    return out;
}

}  // namespace gbslxe
