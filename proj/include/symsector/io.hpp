#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "symsector/errors.hpp"
#include "symsector/linalg.hpp"
#include "symsector/states.hpp"

namespace symsector {

using json = nlohmann::json;

// Shared matrix format: { "d": int, "n": int, "re": [[..]], "im": [[..]] }.
inline json matrix_to_json(const CMatrix& m, int d, int n) {
    json re = json::array(), im = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json re_row = json::array(), im_row = json::array();
        for (int j = 0; j < m.cols(); ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"d", d}, {"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

// Shared vector format: { "d": int, "n": int, "re": [..], "im": [..] }.
inline json vector_to_json(const std::vector<cdouble>& v, int d, int n) {
    json re = json::array(), im = json::array();
    for (const cdouble& z : v) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return json{{"d", d}, {"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

struct MatrixFile {
    int d = 0;
    int n = 0;
    CMatrix matrix;
};

inline MatrixFile matrix_from_json(const json& j) try {
    if (!j.is_object() || !j.contains("d") || !j.contains("n") || !j.contains("re") ||
        !j.contains("im"))
        throw InputError("matrix json: expected fields d, n, re, im");
    MatrixFile mf;
    mf.d = j.at("d").get<int>();
    mf.n = j.at("n").get<int>();
    const json& re = j.at("re");
    const json& im = j.at("im");
    if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty() ||
        !re.at(0).is_array())
        throw InputError("matrix json: re/im must be equal-shape non-empty nested arrays");
    const int rows = static_cast<int>(re.size());
    const int cols = static_cast<int>(re.at(0).size());
    mf.matrix = CMatrix(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& re_row = re.at(static_cast<std::size_t>(i));
        const json& im_row = im.at(static_cast<std::size_t>(i));
        if (!re_row.is_array() || !im_row.is_array() ||
            static_cast<int>(re_row.size()) != cols || static_cast<int>(im_row.size()) != cols)
            throw InputError("matrix json: ragged rows");
        for (int k = 0; k < cols; ++k)
            mf.matrix(i, k) = cdouble(re_row.at(static_cast<std::size_t>(k)).get<double>(),
                                      im_row.at(static_cast<std::size_t>(k)).get<double>());
    }
    return mf;
} catch (const json::exception& e) {
    throw InputError(std::string("matrix json: ") + e.what());
}

struct VectorFile {
    int d = 0;
    int n = 0;
    std::vector<cdouble> values;
};

inline VectorFile vector_from_json(const json& j) try {
    if (!j.is_object() || !j.contains("d") || !j.contains("n") || !j.contains("re") ||
        !j.contains("im"))
        throw InputError("vector json: expected fields d, n, re, im");
    VectorFile vf;
    vf.d = j.at("d").get<int>();
    vf.n = j.at("n").get<int>();
    const json& re = j.at("re");
    const json& im = j.at("im");
    if (!re.is_array() || !im.is_array() || re.size() != im.size())
        throw InputError("vector json: re/im must be equal-length arrays");
    vf.values.reserve(re.size());
    for (std::size_t i = 0; i < re.size(); ++i)
        vf.values.emplace_back(re.at(i).get<double>(), im.at(i).get<double>());
    return vf;
} catch (const json::exception& e) {
    throw InputError(std::string("vector json: ") + e.what());
}

namespace detail {

inline void dump_value(const json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent * depth), ' ');
    const std::string pad_in(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                out += json(it.key()).dump();
                out += ": ";
                dump_value(it.value(), out, indent, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const json& item : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                dump_value(item, out, indent, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                return;
            }
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out += buf;
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

} // namespace detail

// Serialization with floating-point numbers rendered at 17 significant
// digits (lossless round trip); object keys come out sorted, so output is
// schema-stable.
inline std::string dump_json(const json& j, int indent = 2) {
    std::string out;
    detail::dump_value(j, out, indent, 0);
    out += "\n";
    return out;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("malformed json in " + path + ": " + e.what());
    }
    return j;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write file: " + path);
    out << dump_json(j);
}

inline DensityMatrix density_from_file(const std::string& path, double psd_tol = 1e-9) {
    const MatrixFile mf = matrix_from_json(read_json_file(path));
    DensityMatrix rho;
    rho.d = mf.d;
    rho.n = mf.n;
    rho.matrix = mf.matrix;
    validate_density(rho, psd_tol);
    return rho;
}

inline FMatrix fmatrix_from_file(const std::string& path) {
    const MatrixFile mf = matrix_from_json(read_json_file(path));
    if (mf.matrix.rows() != mf.n || mf.matrix.cols() != mf.d)
        throw InputError("F-matrix file: expected n rows and d columns");
    FMatrix f(mf.n, mf.d);
    f.entries = mf.matrix;
    return f;
}

} // namespace symsector
