#include "kroncode/io.hpp"

#include <fstream>
#include <sstream>

namespace kron {

namespace {

constexpr int kFormatVersion = 1;

OrderedJson params_to_json(const std::vector<std::pair<std::string, int>>& params) {
    OrderedJson j = OrderedJson::object();
    for (const auto& [key, value] : params) j[key] = value;
    return j;
}

int require_int(const OrderedJson& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw InvalidParam("code file is missing integer field '" + key + "'");
    return j[key].get<int>();
}

OrderedJson rational_to_json(const Rational& r) {
    // Lowest terms with positive denominator; cpp_rational keeps both.
    return OrderedJson::array({boost::multiprecision::numerator(r).str(),
                               boost::multiprecision::denominator(r).str()});
}

OrderedJson counts_to_json(const NeighborCounts& c) {
    OrderedJson j = OrderedJson::object();
    j["down"] = c.down;
    j["same"] = c.same;
    j["up"] = c.up;
    return j;
}

}  // namespace

OrderedJson code_to_json(const CodeSpec& spec) {
    OrderedJson j = OrderedJson::object();
    j["format_version"] = kFormatVersion;
    j["q"] = spec.field->q();
    if (spec.field->e() > 1) j["modulus"] = spec.field->modulus();
    j["family"] = family_name(spec.family);
    j["params"] = params_to_json(spec.params);
    OrderedJson h = OrderedJson::object();
    h["rows"] = spec.H.rows();
    h["cols"] = spec.H.cols();
    h["entries"] = spec.H.entries();
    j["H"] = h;
    return j;
}

CodeSpec code_from_json(const OrderedJson& j) {
    if (require_int(j, "format_version") != kFormatVersion)
        throw InvalidParam("unsupported code file version");
    const int q = require_int(j, "q");
    const FieldPtr field = make_field(q);
    if (j.contains("modulus") &&
        j["modulus"].get<std::vector<int>>() != field->modulus())
        throw InvalidParam("code file modulus differs from the canonical modulus");

    const Family family = family_from_name(j.at("family").get<std::string>());
    const OrderedJson& params = j.at("params");

    CodeSpec spec = [&]() -> CodeSpec {
        switch (family) {
            case Family::hamming:
                return hamming_check(field, require_int(params, "m"));
            case Family::repetition:
                return repetition_check(field, require_int(params, "n"));
            case Family::kron_cr:
                return kron_cr_code(field, require_int(params, "m_a"),
                                    require_int(params, "m_b"));
            case Family::kron_up:
                return kron_up_code(field, require_int(params, "n_a"),
                                    require_int(params, "m"));
            case Family::custom: {
                CodeSpec s;
                s.family = Family::custom;
                s.field = field;
                s.H = GFMatrix(field, 0, 0);
                return s;
            }
        }
        throw InvalidParam("unknown family");
    }();

    const OrderedJson& h = j.at("H");
    const int rows = require_int(h, "rows");
    const int cols = require_int(h, "cols");
    const auto entries = h.at("entries").get<std::vector<int>>();
    if (static_cast<std::size_t>(rows) * cols != entries.size())
        throw InvalidParam("entry count differs from rows * cols");
    if (family != Family::custom && (rows != spec.H.rows() || cols != spec.H.cols()))
        throw InvalidParam("H dimensions are inconsistent with the family parameters");

    // The stored entries are authoritative; a file may carry a parity check
    // that differs from the canonical construction (verify treats that as a
    // mismatch to report, not an input error).
    GFMatrix loaded(field, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int jj = 0; jj < cols; ++jj) loaded.set(i, jj, entries[i * cols + jj]);
    spec.H = std::move(loaded);
    spec.n = cols;
    spec.k = cols - rank(spec.H);
    return spec;
}

void save_code(const CodeSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << code_to_json(spec).dump(2) << '\n';
}

CodeSpec load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    OrderedJson j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw InvalidParam("cannot parse " + path + ": " + ex.what());
    }
    return code_from_json(j);
}

OrderedJson report_to_json(const AnalysisReport& rep) {
    OrderedJson j = OrderedJson::object();
    j["format_version"] = kFormatVersion;

    OrderedJson params = OrderedJson::object();
    params["family"] = family_name(rep.family);
    params["q"] = rep.q;
    params["n"] = rep.n;
    params["k"] = rep.k;
    if (rep.d)
        params["d"] = *rep.d;
    else
        params["d"] = nullptr;
    for (const auto& [key, value] : rep.params) params[key] = value;
    j["params"] = params;

    j["rho"] = rep.rho;
    j["s"] = rep.s;
    j["cr_verdict"] =
        rep.completely_regular ? "completely_regular" : "not_completely_regular";
    j["up_verdict"] = rep.uniformly_packed ? "uniformly_packed" : "not_uniformly_packed";

    if (rep.intersection_array) {
        OrderedJson arr = OrderedJson::object();
        arr["b"] = rep.intersection_array->b;
        arr["c"] = rep.intersection_array->c;
        arr["a"] = rep.intersection_array->a;
        j["intersection_array"] = arr;
    }
    if (rep.witness) {
        OrderedJson w = OrderedJson::object();
        w["depth"] = rep.witness->depth;
        w["syndrome_1"] = rep.witness->syndrome1;
        w["syndrome_2"] = rep.witness->syndrome2;
        w["counts_1"] = counts_to_json(rep.witness->counts1);
        w["counts_2"] = counts_to_json(rep.witness->counts2);
        j["witness"] = w;
    }
    if (rep.uniformly_packed) {
        OrderedJson alpha = OrderedJson::array();
        for (const Rational& a : rep.alpha) alpha.push_back(rational_to_json(a));
        j["alpha"] = alpha;
    }
    j["dual_weight_set"] = rep.dual_weight_set;
    return j;
}

std::string report_to_csv(const AnalysisReport& rep) {
    // Flat key,value rows; list cells are space-separated.
    std::ostringstream out;
    out << "key,value\n";
    out << "family," << family_name(rep.family) << '\n';
    out << "q," << rep.q << '\n';
    out << "n," << rep.n << '\n';
    out << "k," << rep.k << '\n';
    out << "d,";
    if (rep.d) out << *rep.d;
    out << '\n';
    for (const auto& [key, value] : rep.params) out << key << ',' << value << '\n';
    out << "rho," << rep.rho << '\n';
    out << "s," << rep.s << '\n';
    out << "cr_verdict,"
        << (rep.completely_regular ? "completely_regular" : "not_completely_regular")
        << '\n';
    out << "up_verdict,"
        << (rep.uniformly_packed ? "uniformly_packed" : "not_uniformly_packed") << '\n';
    auto join = [](const auto& xs) {
        std::ostringstream cell;
        bool first = true;
        for (const auto& x : xs) {
            if (!first) cell << ' ';
            cell << x;
            first = false;
        }
        return cell.str();
    };
    if (rep.intersection_array) {
        out << "intersection_b," << join(rep.intersection_array->b) << '\n';
        out << "intersection_c," << join(rep.intersection_array->c) << '\n';
        out << "intersection_a," << join(rep.intersection_array->a) << '\n';
    }
    if (rep.witness) {
        out << "witness_depth," << rep.witness->depth << '\n';
        out << "witness_syndrome_1," << join(rep.witness->syndrome1) << '\n';
        out << "witness_syndrome_2," << join(rep.witness->syndrome2) << '\n';
        out << "witness_counts_1," << rep.witness->counts1.down << ' '
            << rep.witness->counts1.same << ' ' << rep.witness->counts1.up << '\n';
        out << "witness_counts_2," << rep.witness->counts2.down << ' '
            << rep.witness->counts2.same << ' ' << rep.witness->counts2.up << '\n';
    }
    if (rep.uniformly_packed) {
        std::ostringstream cell;
        bool first = true;
        for (const Rational& a : rep.alpha) {
            if (!first) cell << ' ';
            cell << boost::multiprecision::numerator(a) << '/'
                 << boost::multiprecision::denominator(a);
            first = false;
        }
        out << "alpha," << cell.str() << '\n';
    }
    out << "dual_weight_set," << join(rep.dual_weight_set) << '\n';
    return out.str();
}

void save_report(const AnalysisReport& rep, const std::string& path,
                 const std::string& format) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    if (format == "json")
        out << report_to_json(rep).dump(2) << '\n';
    else if (format == "csv")
        out << report_to_csv(rep);
    else
        throw InvalidParam("unknown report format: " + format);
}

}  // namespace kron
