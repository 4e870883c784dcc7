#include "cpchart/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cpchart/parser.hpp"

namespace cpchart {
namespace {

struct TomlValue {
    enum class Kind { string, integer, real, boolean, array };
    Kind kind = Kind::string;
    std::string s;
    long long i = 0;
    double d = 0;
    bool b = false;
    std::vector<TomlValue> items;
    int line = 0;
};

using Section = std::map<std::string, TomlValue>;
using Document = std::map<std::string, Section>;

bool is_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Removes # comments, respecting double-quoted strings.
std::string strip_comment(const std::string& s, int line) {
    bool in_str = false;
    for (size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if (in_str) {
            if (c == '\\') ++k;
            else if (c == '"') in_str = false;
        } else if (c == '"') {
            in_str = true;
        } else if (c == '#') {
            return s.substr(0, k);
        }
    }
    if (in_str) throw ManifestError("unterminated string", line);
    return s;
}

int bracket_depth_delta(const std::string& s) {
    int d = 0;
    bool in_str = false;
    for (size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if (in_str) {
            if (c == '\\') ++k;
            else if (c == '"') in_str = false;
        } else if (c == '"') {
            in_str = true;
        } else if (c == '[') {
            ++d;
        } else if (c == ']') {
            --d;
        }
    }
    return d;
}

class ValueParser {
public:
    ValueParser(std::string text, int line) : text_(std::move(text)), line_(line) {}

    TomlValue parse() {
        TomlValue v = parse_value();
        skip_ws();
        if (pos_ != text_.size()) throw ManifestError("trailing characters after value", line_);
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    TomlValue parse_value() {
        skip_ws();
        TomlValue v;
        v.line = line_;
        char c = peek();
        if (c == '"') {
            v.kind = TomlValue::Kind::string;
            v.s = parse_string();
        } else if (c == '[') {
            v.kind = TomlValue::Kind::array;
            ++pos_;
            skip_ws();
            if (peek() == ']') {
                ++pos_;
                return v;
            }
            while (true) {
                v.items.push_back(parse_value());
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    skip_ws();
                    if (peek() == ']') {  // trailing comma
                        ++pos_;
                        break;
                    }
                    continue;
                }
                if (peek() == ']') {
                    ++pos_;
                    break;
                }
                throw ManifestError("expected ',' or ']' in array", line_);
            }
        } else if (text_.compare(pos_, 4, "true") == 0) {
            v.kind = TomlValue::Kind::boolean;
            v.b = true;
            pos_ += 4;
        } else if (text_.compare(pos_, 5, "false") == 0) {
            v.kind = TomlValue::Kind::boolean;
            v.b = false;
            pos_ += 5;
        } else if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            parse_number(v);
        } else {
            throw ManifestError("cannot parse value", line_);
        }
        return v;
    }

    std::string parse_string() {
        ++pos_;  // opening quote
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            char c = text_[pos_++];
            if (c == '\\') {
                if (pos_ >= text_.size()) throw ManifestError("dangling escape", line_);
                char e = text_[pos_++];
                if (e == '"' || e == '\\') out.push_back(e);
                else throw ManifestError("unsupported escape in string", line_);
            } else {
                out.push_back(c);
            }
        }
        if (pos_ >= text_.size()) throw ManifestError("unterminated string", line_);
        ++pos_;  // closing quote
        return out;
    }

    void parse_number(TomlValue& v) {
        size_t start = pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        bool is_float = false;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '.' || c == 'e' || c == 'E') {
                is_float = true;
                ++pos_;
                if ((c == 'e' || c == 'E') && (peek() == '+' || peek() == '-')) ++pos_;
            } else {
                break;
            }
        }
        std::string tok = text_.substr(start, pos_ - start);
        errno = 0;
        if (is_float) {
            v.kind = TomlValue::Kind::real;
            char* end = nullptr;
            v.d = std::strtod(tok.c_str(), &end);
            if (end != tok.c_str() + tok.size() || errno)
                throw ManifestError("bad number '" + tok + "'", line_);
        } else {
            v.kind = TomlValue::Kind::integer;
            char* end = nullptr;
            v.i = std::strtoll(tok.c_str(), &end, 10);
            if (end != tok.c_str() + tok.size() || errno)
                throw ManifestError("bad integer '" + tok + "'", line_);
            v.d = static_cast<double>(v.i);
        }
    }

    std::string text_;
    size_t pos_ = 0;
    int line_;
};

Document parse_document(const std::string& text) {
    Document doc;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        int start_line = line_no;
        std::string logical = strip_comment(raw, line_no);
        int depth = bracket_depth_delta(logical);
        while (depth > 0) {
            if (!std::getline(in, raw))
                throw ManifestError("unclosed '[' in value", start_line);
            ++line_no;
            std::string cont = strip_comment(raw, line_no);
            logical += "\n" + cont;
            depth += bracket_depth_delta(cont);
        }
        std::string s = strip(logical);
        if (s.empty()) continue;
        if (s.front() == '[' && s.back() == ']' && s.find('=') == std::string::npos) {
            section = strip(s.substr(1, s.size() - 2));
            if (!is_ident(section)) throw ManifestError("bad section name '" + section + "'", start_line);
            doc[section];  // section may legitimately stay empty
            continue;
        }
        size_t eq = std::string::npos;
        {  // first '=' outside strings
            bool in_str = false;
            for (size_t k = 0; k < s.size(); ++k) {
                char c = s[k];
                if (in_str) {
                    if (c == '\\') ++k;
                    else if (c == '"') in_str = false;
                } else if (c == '"') {
                    in_str = true;
                } else if (c == '=') {
                    eq = k;
                    break;
                }
            }
        }
        if (eq == std::string::npos) throw ManifestError("expected key = value", start_line);
        std::string key = strip(s.substr(0, eq));
        if (!is_ident(key)) throw ManifestError("bad key '" + key + "'", start_line);
        if (section.empty()) throw ManifestError("key outside any [section]", start_line);
        if (doc[section].count(key))
            throw ManifestError("duplicate key '" + key + "' in [" + section + "]", start_line);
        ValueParser vp(s.substr(eq + 1), start_line);
        doc[section][key] = vp.parse();
    }
    return doc;
}

[[noreturn]] void type_error(const std::string& what, const TomlValue& v) {
    throw ManifestError("expected " + what, v.line);
}

long long as_int(const TomlValue& v) {
    if (v.kind != TomlValue::Kind::integer) type_error("an integer", v);
    return v.i;
}

double as_double(const TomlValue& v) {
    if (v.kind != TomlValue::Kind::integer && v.kind != TomlValue::Kind::real)
        type_error("a number", v);
    return v.d;
}

const std::string& as_string(const TomlValue& v) {
    if (v.kind != TomlValue::Kind::string) type_error("a string", v);
    return v.s;
}

std::vector<std::string> as_string_array(const TomlValue& v) {
    if (v.kind != TomlValue::Kind::array) type_error("an array of strings", v);
    std::vector<std::string> out;
    for (const auto& item : v.items) out.push_back(as_string(item));
    return out;
}

void reject_unknown_keys(const Section& sec, const std::string& name,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, val] : sec) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }) == allowed.end())
            throw ManifestError("unknown key '" + key + "' in [" + name + "]", val.line);
    }
}

Expr parse_entry(const std::string& text, const VarSetPtr& vars, const std::string& where,
                 int line) {
    try {
        return parse_expr(text, vars);
    } catch (const ParseError& e) {
        throw ManifestError(where + ": " + e.what(), line);
    } catch (const std::exception& e) {
        throw ManifestError(where + ": " + e.what(), line);
    }
}

std::vector<std::vector<Expr>> parse_matrix(const TomlValue& v, const VarSetPtr& vars, int rows,
                                            int cols, const std::string& section) {
    if (v.kind != TomlValue::Kind::array) type_error("a matrix (array of arrays)", v);
    if (static_cast<int>(v.items.size()) != rows)
        throw ManifestError("[" + section + "] matrix must have " + std::to_string(rows) + " rows",
                            v.line);
    std::vector<std::vector<Expr>> out;
    for (int r = 0; r < rows; ++r) {
        const TomlValue& row = v.items[r];
        if (row.kind != TomlValue::Kind::array || static_cast<int>(row.items.size()) != cols)
            throw ManifestError("[" + section + "] row " + std::to_string(r + 1) + " must have " +
                                    std::to_string(cols) + " entries",
                                row.line);
        std::vector<Expr> exprs;
        for (int c = 0; c < cols; ++c) {
            std::string where = "[" + section + "] matrix[" + std::to_string(r + 1) + "][" +
                                std::to_string(c + 1) + "]";
            exprs.push_back(parse_entry(as_string(row.items[c]), vars, where, row.items[c].line));
        }
        out.push_back(std::move(exprs));
    }
    return out;
}

ExprMatrix to_matrix(const ChartPtr& chart, const std::vector<std::vector<Expr>>& rows) {
    int n = static_cast<int>(rows.size());
    ExprMatrix m(n, n, chart->zero());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = rows[r][c];
    return m;
}

struct CheckRequirement {
    bool poisson = false;
    bool cotangent = false;
    bool hermitian = false;
    bool fields = false;
};

CheckRequirement requirement_for(const std::string& check) {
    if (check == "jacobi" || check == "reality" || check == "j-invariance") return {true, false, false, false};
    if (check == "poisson-field") return {true, false, false, true};
    if (check == "riemann-poisson" || check == "connection-axioms" || check == "prop42-equivalence")
        return {true, true, false, false};
    if (check == "hermitian" || check == "kahler-triple" || check == "closed")
        return {false, false, true, false};
    throw ManifestError("unknown check '" + check + "'");
}

}  // namespace

const std::vector<std::string>& known_check_names() {
    static const std::vector<std::string> names = {
        "closed",        "connection-axioms", "hermitian",          "j-invariance", "jacobi",
        "kahler-triple", "poisson-field",     "prop42-equivalence", "reality",      "riemann-poisson",
    };
    return names;
}

Manifest parse_manifest(const std::string& text, const std::string& path_label) {
    Document doc = parse_document(text);

    for (const auto& [name, sec] : doc) {
        (void)sec;
        static const std::vector<std::string> sections = {
            "chart", "poisson", "hermitian", "cotangent_metric", "fields", "functions", "checks",
            "numeric"};
        if (std::find(sections.begin(), sections.end(), name) == sections.end())
            throw ManifestError("unknown section [" + name + "]");
    }

    Manifest m;
    m.path = path_label;

    auto chart_it = doc.find("chart");
    if (chart_it == doc.end()) throw ManifestError("missing [chart] section");
    const Section& chart_sec = chart_it->second;
    reject_unknown_keys(chart_sec, "chart", {"dimension", "origin_excluded", "constants"});
    auto dim_it = chart_sec.find("dimension");
    if (dim_it == chart_sec.end()) throw ManifestError("[chart] needs dimension");
    long long n = as_int(dim_it->second);
    if (n < 1 || n > 8) throw ManifestError("[chart] dimension must be in 1..8", dim_it->second.line);

    std::vector<bool> excluded(static_cast<size_t>(n), false);
    if (auto it = chart_sec.find("origin_excluded"); it != chart_sec.end()) {
        const TomlValue& v = it->second;
        if (v.kind == TomlValue::Kind::boolean) {
            excluded.assign(static_cast<size_t>(n), v.b);
        } else if (v.kind == TomlValue::Kind::array) {
            if (static_cast<long long>(v.items.size()) != n)
                throw ManifestError("origin_excluded needs one flag per coordinate", v.line);
            for (size_t j = 0; j < v.items.size(); ++j) {
                if (v.items[j].kind != TomlValue::Kind::boolean)
                    type_error("a boolean", v.items[j]);
                excluded[j] = v.items[j].b;
            }
        } else {
            type_error("a boolean or array of booleans", v);
        }
    }

    std::vector<std::string> constants;
    if (auto it = chart_sec.find("constants"); it != chart_sec.end())
        constants = as_string_array(it->second);

    try {
        m.chart = make_chart(static_cast<int>(n), excluded, constants);
    } catch (const std::exception& e) {
        throw ManifestError(std::string("[chart] ") + e.what());
    }
    const int dim = m.chart->dim();

    if (auto it = doc.find("poisson"); it != doc.end()) {
        reject_unknown_keys(it->second, "poisson", {"matrix"});
        auto mat_it = it->second.find("matrix");
        if (mat_it == it->second.end()) throw ManifestError("[poisson] needs matrix");
        m.poisson = Bivector11(
            m.chart, parse_matrix(mat_it->second, m.chart->vars, m.chart->n, m.chart->n, "poisson"));
    }

    if (auto it = doc.find("hermitian"); it != doc.end()) {
        reject_unknown_keys(it->second, "hermitian", {"matrix"});
        auto mat_it = it->second.find("matrix");
        if (mat_it == it->second.end()) throw ManifestError("[hermitian] needs matrix");
        m.hermitian = HermitianMetric(
            m.chart,
            parse_matrix(mat_it->second, m.chart->vars, m.chart->n, m.chart->n, "hermitian"));
    }

    if (auto it = doc.find("cotangent_metric"); it != doc.end()) {
        reject_unknown_keys(it->second, "cotangent_metric", {"matrix"});
        auto mat_it = it->second.find("matrix");
        if (mat_it == it->second.end()) throw ManifestError("[cotangent_metric] needs matrix");
        auto rows = parse_matrix(mat_it->second, m.chart->vars, dim, dim, "cotangent_metric");
        try {
            m.cotangent = CotangentMetric(m.chart, to_matrix(m.chart, rows));
        } catch (const std::exception& e) {
            throw ManifestError(std::string("[cotangent_metric] ") + e.what(), mat_it->second.line);
        }
    }

    if (auto it = doc.find("fields"); it != doc.end()) {
        for (const auto& [name, val] : it->second) {
            if (val.kind != TomlValue::Kind::array ||
                static_cast<int>(val.items.size()) != dim)
                throw ManifestError("field '" + name + "' needs " + std::to_string(dim) +
                                        " components",
                                    val.line);
            std::vector<Expr> comps;
            for (int a = 0; a < dim; ++a)
                comps.push_back(parse_entry(as_string(val.items[a]), m.chart->vars,
                                            "[fields] " + name + "[" + std::to_string(a + 1) + "]",
                                            val.items[a].line));
            m.fields.emplace(name, VectorField(m.chart, std::move(comps)));
        }
    }

    if (auto it = doc.find("functions"); it != doc.end()) {
        for (const auto& [name, val] : it->second)
            m.functions.emplace(name, parse_entry(as_string(val), m.chart->vars,
                                                  "[functions] " + name, val.line));
    }

    auto checks_it = doc.find("checks");
    if (checks_it == doc.end()) throw ManifestError("missing [checks] section");
    reject_unknown_keys(checks_it->second, "checks", {"names"});
    auto names_it = checks_it->second.find("names");
    if (names_it == checks_it->second.end()) throw ManifestError("[checks] needs names");
    m.checks = as_string_array(names_it->second);
    if (m.checks.empty()) throw ManifestError("[checks] names must not be empty", names_it->second.line);
    {
        std::vector<std::string> seen;
        for (const auto& c : m.checks) {
            if (std::find(known_check_names().begin(), known_check_names().end(), c) ==
                known_check_names().end())
                throw ManifestError("unknown check '" + c + "'", names_it->second.line);
            if (std::find(seen.begin(), seen.end(), c) != seen.end())
                throw ManifestError("check '" + c + "' listed twice", names_it->second.line);
            seen.push_back(c);
        }
    }

    if (auto it = doc.find("numeric"); it != doc.end()) {
        const Section& sec = it->second;
        reject_unknown_keys(sec, "numeric",
                            {"seed", "samples", "modulus_min", "modulus_max", "rel_tol", "fd_step",
                             "pole_tol"});
        if (auto k = sec.find("seed"); k != sec.end())
            m.numeric.seed = static_cast<uint64_t>(as_int(k->second));
        if (auto k = sec.find("samples"); k != sec.end()) {
            long long v = as_int(k->second);
            if (v < 1 || v > 100000) throw ManifestError("samples must be in 1..100000", k->second.line);
            m.numeric.samples = static_cast<int>(v);
        }
        if (auto k = sec.find("modulus_min"); k != sec.end()) m.numeric.modulus_min = as_double(k->second);
        if (auto k = sec.find("modulus_max"); k != sec.end()) m.numeric.modulus_max = as_double(k->second);
        if (m.numeric.modulus_min <= 0 || m.numeric.modulus_max < m.numeric.modulus_min)
            throw ManifestError("modulus bounds must satisfy 0 < min <= max");
        if (auto k = sec.find("rel_tol"); k != sec.end()) m.numeric.rel_tol = as_double(k->second);
        if (auto k = sec.find("fd_step"); k != sec.end()) m.numeric.fd_step = as_double(k->second);
        if (auto k = sec.find("pole_tol"); k != sec.end()) m.numeric.pole_tol = as_double(k->second);
        if (m.numeric.rel_tol <= 0 || m.numeric.fd_step <= 0 || m.numeric.pole_tol <= 0)
            throw ManifestError("tolerances and fd_step must be positive");
    }

    for (const auto& check : m.checks) {
        CheckRequirement req = requirement_for(check);
        if (req.poisson && !m.poisson)
            throw ManifestError("check '" + check + "' needs a [poisson] matrix");
        if (req.cotangent && !m.cotangent)
            throw ManifestError("check '" + check + "' needs a [cotangent_metric] matrix");
        if (req.hermitian && !m.hermitian)
            throw ManifestError("check '" + check + "' needs a [hermitian] matrix");
        if (req.fields && m.fields.empty())
            throw ManifestError("check '" + check + "' needs at least one entry in [fields]");
    }

    return m;
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ManifestError("cannot open manifest '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifest(buf.str(), path);
}

}  // namespace cpchart
