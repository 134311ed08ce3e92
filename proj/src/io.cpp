#include "efgrowth/io.hpp"
#include "efgrowth/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

namespace efgrowth::io {

namespace {

std::string sub(const std::string& path, const std::string& key) {
    return path + "." + key;
}

std::string at(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

} // namespace

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error(path, "cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw schema_error(path, std::string("JSON parse error: ") + e.what());
    }
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& path) {
    if (!j.is_object()) throw schema_error(path, "expected an object");
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw schema_error(sub(path, key), "unknown field");
    }
}

const json& need(const json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw schema_error(sub(path, key), "missing required field");
    return j.at(key);
}

double need_real(const json& j, const char* key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_number()) throw schema_error(sub(path, key), "expected a number");
    return v.get<double>();
}

long long need_int(const json& j, const char* key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_number_integer()) throw schema_error(sub(path, key), "expected an integer");
    return v.get<long long>();
}

std::vector<double> need_real_array(const json& j, const char* key,
                                    const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_array()) throw schema_error(sub(path, key), "expected an array");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number())
            throw schema_error(at(sub(path, key), i), "expected a number");
        out.push_back(v[i].get<double>());
    }
    return out;
}

Complex parse_complex(const json& j, const std::string& path) {
    check_keys(j, {"re", "im"}, path);
    const double re = need_real(j, "re", path);
    const double im = need_real(j, "im", path);
    if (!std::isfinite(re) || !std::isfinite(im))
        throw schema_error(path, "complex components must be finite");
    return {re, im};
}

json complex_to_json(const Complex& z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

json real_to_json(double x) {
    if (std::isfinite(x)) return json(x);
    if (std::isnan(x)) return json("nan");
    return json(x > 0 ? "inf" : "-inf");
}

efun::FiniteOrderFunction parse_zerodata(const json& j, const std::string& path) {
    check_keys(j, {"leading", "origin_mult", "expoly", "genus", "zeros"}, path);
    const Complex leading = parse_complex(need(j, "leading", path), sub(path, "leading"));
    const long long m = need_int(j, "origin_mult", path);
    if (m < 0) throw schema_error(sub(path, "origin_mult"), "must be >= 0");
    const long long genus = need_int(j, "genus", path);
    if (genus < 0) throw schema_error(sub(path, "genus"), "must be >= 0");

    const json& ep = need(j, "expoly", path);
    if (!ep.is_array()) throw schema_error(sub(path, "expoly"), "expected an array");
    std::vector<Complex> expoly;
    for (std::size_t i = 0; i < ep.size(); ++i)
        expoly.push_back(parse_complex(ep[i], at(sub(path, "expoly"), i)));

    // paper-form rules, strict
    if (genus == 0 && !expoly.empty())
        throw schema_error(sub(path, "expoly"), "genus 0 requires an empty expoly");
    if (static_cast<long long>(expoly.size()) > genus + 1)
        throw schema_error(sub(path, "expoly"),
                           "degree exceeds genus+1 (= " + std::to_string(genus + 1) + ")");

    const json& zs = need(j, "zeros", path);
    if (!zs.is_array()) throw schema_error(sub(path, "zeros"), "expected an array");
    std::vector<efun::ZeroEntry> zeros;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        const std::string zp = at(sub(path, "zeros"), i);
        check_keys(zs[i], {"re", "im", "mult"}, zp);
        const double re = need_real(zs[i], "re", zp);
        const double im = need_real(zs[i], "im", zp);
        const long long mult = need_int(zs[i], "mult", zp);
        if (mult < 1) throw schema_error(sub(zp, "mult"), "must be >= 1");
        const Complex loc(re, im);
        if (!is_finite(loc) || std::abs(loc) == 0.0)
            throw schema_error(zp, "zero locations must be finite and nonzero");
        zeros.push_back({loc, static_cast<int>(mult)});
    }

    if (std::abs(leading) == 0.0)
        throw schema_error(sub(path, "leading"), "leading coefficient must be nonzero");
    try {
        return efun::FiniteOrderFunction(leading, static_cast<int>(m), std::move(expoly),
                                         static_cast<int>(genus), std::move(zeros));
    } catch (const std::invalid_argument& e) {
        throw schema_error(path, e.what());
    }
}

json zerodata_to_json(const efun::FiniteOrderFunction& f) {
    json j;
    j["leading"] = complex_to_json(f.leading());
    j["origin_mult"] = f.origin_mult();
    j["expoly"] = json::array();
    for (const Complex& c : f.expoly()) j["expoly"].push_back(complex_to_json(c));
    j["genus"] = f.genus();
    j["zeros"] = json::array();
    for (const auto& ze : f.zeros())
        j["zeros"].push_back(json{{"re", ze.location.real()},
                                  {"im", ze.location.imag()},
                                  {"mult", ze.multiplicity}});
    return j;
}

SeqSpecFile parse_seqspec(const json& j, const std::string& path) {
    check_keys(j, {"functions", "k", "R_grid", "R_witness", "series", "analysis", "config"},
               path);
    const json& fns = need(j, "functions", path);
    if (!fns.is_array() || fns.empty())
        throw schema_error(sub(path, "functions"), "expected a nonempty array");
    std::vector<efun::FiniteOrderFunction> functions;
    for (std::size_t i = 0; i < fns.size(); ++i)
        functions.push_back(parse_zerodata(fns[i], at(sub(path, "functions"), i)));

    std::vector<double> k = need_real_array(j, "k", path);
    std::vector<double> grid = need_real_array(j, "R_grid", path);
    std::optional<std::vector<double>> witness;
    if (j.contains("R_witness")) witness = need_real_array(j, "R_witness", path);

    SeqSpecFile out{seqlab::SequenceSpec([&] {
                        try {
                            return seqlab::SequenceSpec(std::move(functions), std::move(k),
                                                        std::move(grid), std::move(witness));
                        } catch (const std::invalid_argument& e) {
                            throw schema_error(path, e.what());
                        }
                    }()),
                    std::nullopt, json::object(), json::object()};

    if (j.contains("series")) {
        const json& se = j.at("series");
        check_keys(se, {"exponents"}, sub(path, "series"));
        const json& ex = need(se, "exponents", sub(path, "series"));
        if (!ex.is_array())
            throw schema_error(sub(sub(path, "series"), "exponents"), "expected an array");
        std::vector<long long> exps;
        for (std::size_t i = 0; i < ex.size(); ++i) {
            if (!ex[i].is_number_integer())
                throw schema_error(at(sub(sub(path, "series"), "exponents"), i),
                                   "expected an integer");
            exps.push_back(ex[i].get<long long>());
        }
        out.series_exponents = std::move(exps);
    }
    if (j.contains("analysis")) out.analysis = j.at("analysis");
    if (j.contains("config")) out.config = j.at("config");
    return out;
}

json seqspec_to_json(const seqlab::SequenceSpec& s,
                     const std::optional<std::vector<long long>>& exponents) {
    json j;
    j["functions"] = json::array();
    for (const auto& f : s.functions) j["functions"].push_back(zerodata_to_json(f));
    j["k"] = s.k;
    j["R_grid"] = s.R_grid;
    if (s.R_witness) j["R_witness"] = *s.R_witness;
    if (exponents) j["series"] = json{{"exponents", *exponents}};
    return j;
}

potential::PointCloud parse_cloud(const json& j, const std::string& path) {
    check_keys(j, {"label", "points"}, path);
    const json& lbl = need(j, "label", path);
    if (!lbl.is_string()) throw schema_error(sub(path, "label"), "expected a string");
    const json& pts = need(j, "points", path);
    if (!pts.is_array() || pts.empty())
        throw schema_error(sub(path, "points"), "expected a nonempty array");
    std::vector<Complex> points;
    for (std::size_t i = 0; i < pts.size(); ++i)
        points.push_back(parse_complex(pts[i], at(sub(path, "points"), i)));
    try {
        return potential::PointCloud(std::move(points), lbl.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw schema_error(path, e.what());
    }
}

json cloud_to_json(const potential::PointCloud& c) {
    json j;
    j["label"] = c.label;
    j["points"] = json::array();
    for (const Complex& p : c.points) j["points"].push_back(complex_to_json(p));
    return j;
}

laplace::Kernel parse_kernel(const json& j, const std::string& path) {
    if (!j.is_object()) throw schema_error(path, "expected an object");
    const json& ty = need(j, "type", path);
    if (!ty.is_string()) throw schema_error(sub(path, "type"), "expected a string");
    const std::string type = ty.get<std::string>();

    std::optional<std::pair<double, double>> hint;
    if (j.contains("support_hint")) {
        const auto arr = need_real_array(j, "support_hint", path);
        if (arr.size() != 2)
            throw schema_error(sub(path, "support_hint"), "expected [lo, hi]");
        hint = {arr[0], arr[1]};
    }

    try {
        if (type == "piecewise_const") {
            check_keys(j, {"type", "breaks", "values", "support_hint"}, path);
            return laplace::Kernel::piecewise_const(need_real_array(j, "breaks", path),
                                                    need_real_array(j, "values", path), hint);
        }
        if (type == "samples") {
            check_keys(j, {"type", "t", "phi", "support_hint"}, path);
            return laplace::Kernel::samples(need_real_array(j, "t", path),
                                            need_real_array(j, "phi", path), hint);
        }
    } catch (const std::invalid_argument& e) {
        throw schema_error(path, e.what());
    }
    throw schema_error(sub(path, "type"),
                       "unknown kernel type (piecewise_const or samples)");
}

json kernel_to_json(const laplace::Kernel& k) {
    json j;
    if (k.rep() == laplace::Kernel::Rep::piecewise_const) {
        j["type"] = "piecewise_const";
        j["breaks"] = k.breaks();
        j["values"] = k.values();
    } else {
        j["type"] = "samples";
        j["t"] = k.sample_t();
        j["phi"] = k.sample_phi();
    }
    if (k.support_hint())
        j["support_hint"] = {k.support_hint()->first, k.support_hint()->second};
    return j;
}

json make_table(const std::vector<std::string>& columns) {
    json t;
    t["columns"] = columns;
    t["rows"] = json::array();
    return t;
}

void table_add_row(json& table, const std::vector<json>& row) {
    table["rows"].push_back(row);
}

void write_table_csv(const json& table, std::ostream& os) {
    const auto& cols = table.at("columns");
    for (std::size_t i = 0; i < cols.size(); ++i)
        os << (i ? "," : "") << cols[i].get<std::string>();
    os << "\n";
    char buf[64];
    for (const auto& row : table.at("rows")) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            const auto& cell = row[i];
            if (cell.is_number_integer()) {
                os << cell.get<long long>();
            } else if (cell.is_number()) {
                std::snprintf(buf, sizeof buf, "%.17g", cell.get<double>());
                os << buf;
            } else if (cell.is_string()) {
                os << cell.get<std::string>();
            } else if (cell.is_boolean()) {
                os << (cell.get<bool>() ? "true" : "false");
            } else {
                os << cell.dump();
            }
        }
        os << "\n";
    }
}

} // namespace efgrowth::io
