#ifndef EFGROWTH_IO_HPP
#define EFGROWTH_IO_HPP

#include "efgrowth/efun.hpp"
#include "efgrowth/laplace.hpp"
#include "efgrowth/potential.hpp"
#include "efgrowth/seqlab.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace efgrowth::io {

using json = nlohmann::json;

// All schemas are strict: unknown fields are rejected, and every
// diagnostic carries the JSON path of the offending field.

json parse_file(const std::string& path);

// zerodata-v1. Paper-form rules are enforced here: expoly degree at most
// genus+1, and genus 0 forces an empty expoly.
efun::FiniteOrderFunction parse_zerodata(const json& j, const std::string& path);
json zerodata_to_json(const efun::FiniteOrderFunction& f);

struct SeqSpecFile {
    seqlab::SequenceSpec spec;
    std::optional<std::vector<long long>> series_exponents;
    json analysis; // optional analysis block (validated by the CLI)
    json config;   // optional config overrides
};

// seqspec-v1: functions (zerodata-v1 entries), k, R_grid, optional
// R_witness, optional series block {"exponents": [...]}, optional
// analysis/config blocks.
SeqSpecFile parse_seqspec(const json& j, const std::string& path);
json seqspec_to_json(const seqlab::SequenceSpec& s,
                     const std::optional<std::vector<long long>>& exponents = {});

// cloud-v1: {"label", "points"}.
potential::PointCloud parse_cloud(const json& j, const std::string& path);
json cloud_to_json(const potential::PointCloud& c);

// kernel-v1: {"type":"piecewise_const","breaks","values"} or
// {"type":"samples","t","phi"}, optional "support_hint":[lo,hi].
laplace::Kernel parse_kernel(const json& j, const std::string& path);
json kernel_to_json(const laplace::Kernel& k);

json complex_to_json(const Complex& z);
Complex parse_complex(const json& j, const std::string& path);

// Finite doubles map to JSON numbers; infinities to the strings
// "inf"/"-inf" (JSON has no infinity literal).
json real_to_json(double x);

// Strictness helpers shared by the CLI's per-command input wrappers.
void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& path);
const json& need(const json& j, const char* key, const std::string& path);
double need_real(const json& j, const char* key, const std::string& path);
long long need_int(const json& j, const char* key, const std::string& path);
std::vector<double> need_real_array(const json& j, const char* key,
                                    const std::string& path);

// Report tables: {"columns": [...], "rows": [[...], ...]} under
// report["tables"][name]; written as CSV with 17 significant digits.
json make_table(const std::vector<std::string>& columns);
void table_add_row(json& table, const std::vector<json>& row);
void write_table_csv(const json& table, std::ostream& os);

} // namespace efgrowth::io

#endif
