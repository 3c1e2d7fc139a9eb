#include "uinorm/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace uinorm {

namespace {

using json = nlohmann::ordered_json;

double finite_number(const json& v, const char* what) {
    if (!v.is_number()) {
        throw std::invalid_argument(std::string("matrix json: ") + what + " must be a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string("matrix json: ") + what + " is not finite");
    }
    return x;
}

}  // namespace

ComplexMatrix matrix_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("matrix json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw std::invalid_argument("matrix json: expected object with rows, cols, entries");
    }
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
        throw std::invalid_argument("matrix json: rows and cols must be positive integers");
    }
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix json: rows and cols must be positive integers");
    }
    const json& ent = j["entries"];
    if (!ent.is_array() || ent.size() != rows * cols) {
        throw std::invalid_argument("matrix json: entries length must equal rows*cols");
    }
    std::vector<cplx> e;
    e.reserve(rows * cols);
    for (const json& pair : ent) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("matrix json: each entry must be [re, im]");
        }
        e.emplace_back(finite_number(pair[0], "entry"), finite_number(pair[1], "entry"));
    }
    return ComplexMatrix(rows, cols, std::move(e));
}

ComplexMatrix matrix_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open matrix file: " + path);
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return matrix_from_json_text(text);
}

std::string matrix_to_json_text(const ComplexMatrix& a) {
    json j;
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    json ent = json::array();
    for (const cplx& z : a.entries()) {
        ent.push_back(json::array({z.real(), z.imag()}));
    }
    j["entries"] = std::move(ent);
    return j.dump();
}

void matrix_to_json_file(const ComplexMatrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot write matrix file: " + path);
    }
    out << matrix_to_json_text(a) << "\n";
}

}  // namespace uinorm
