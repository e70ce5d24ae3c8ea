#include "weylcdma/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace weylcdma {

std::string format_double(double x) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

std::string family_name(Family family) { return family == Family::weyl ? "weyl" : "gold"; }

void write_sequence_csv(std::ostream& out, const Eigen::Ref<const ComplexVector>& seq) {
    out << "index,re,im\n";
    for (Eigen::Index i = 0; i < seq.size(); ++i)
        out << (i + 1) << ',' << format_double(seq[i].real()) << ','
            << format_double(seq[i].imag()) << '\n';
}

namespace {

double parse_field(const std::string& field, const char* what) {
    try {
        std::size_t used = 0;
        const double x = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("sequence csv: bad ") + what + " '" + field +
                                    "'");
    }
}

}  // namespace

ComplexVector read_sequence_csv(std::istream& in) {
    std::vector<Complex> chips;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first && line.rfind("index", 0) == 0) {
            first = false;
            continue;
        }
        first = false;
        std::stringstream row(line);
        std::string index, re, im;
        if (!std::getline(row, index, ',') || !std::getline(row, re, ',') ||
            !std::getline(row, im, ','))
            throw std::invalid_argument("sequence csv: expected index,re,im row, got '" + line +
                                        "'");
        chips.emplace_back(parse_field(re, "real part"), parse_field(im, "imaginary part"));
    }
    if (chips.empty()) throw std::invalid_argument("sequence csv: no data rows");
    return Eigen::Map<const ComplexVector>(chips.data(), static_cast<Eigen::Index>(chips.size()));
}

void write_sequence_json(std::ostream& out, const Eigen::Ref<const ComplexVector>& seq) {
    nlohmann::json arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < seq.size(); ++i)
        arr.push_back({seq[i].real(), seq[i].imag()});
    out << arr.dump() << '\n';
}

ComplexVector read_sequence_json(std::istream& in) {
    nlohmann::json arr;
    try {
        in >> arr;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("sequence json: ") + e.what());
    }
    if (!arr.is_array() || arr.empty())
        throw std::invalid_argument("sequence json: expected a non-empty array");
    ComplexVector seq(static_cast<Eigen::Index>(arr.size()));
    for (Eigen::Index i = 0; i < seq.size(); ++i) {
        const auto& pair = arr[static_cast<std::size_t>(i)];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw std::invalid_argument("sequence json: each chip must be a [re, im] pair");
        seq[i] = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
    return seq;
}

void write_profile_csv(std::ostream& out, const std::vector<Complex>& values) {
    out << "gap,re,im,abs\n";
    for (std::size_t l = 0; l < values.size(); ++l)
        out << l << ',' << format_double(values[l].real()) << ','
            << format_double(values[l].imag()) << ',' << format_double(std::abs(values[l]))
            << '\n';
}

void write_coefficients_csv(std::ostream& out, const CoefficientVector& coeffs) {
    out << "m,re,im,abs\n";
    for (Eigen::Index i = 0; i < coeffs.values.size(); ++i)
        out << (i + 1) << ',' << format_double(coeffs.values[i].real()) << ','
            << format_double(coeffs.values[i].imag()) << ','
            << format_double(std::abs(coeffs.values[i])) << '\n';
}

void write_ber_csv(std::ostream& out, const std::vector<BerResult>& results) {
    out << "family,N,K,ebn0_db,bits,errors,ber,ci95\n";
    for (const auto& r : results)
        out << family_name(r.family) << ',' << r.n << ',' << r.users << ','
            << format_double(r.ebn0_db) << ',' << r.bits_simulated << ',' << r.bit_errors << ','
            << format_double(r.ber) << ',' << format_double(r.ci95) << '\n';
}

void write_ber_json(std::ostream& out, const std::vector<BerResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json row{{"family", family_name(r.family)}, {"N", r.n},
                           {"K", r.users},                    {"bits", r.bits_simulated},
                           {"errors", r.bit_errors},          {"ber", r.ber},
                           {"ci95", r.ci95}};
        if (std::isinf(r.ebn0_db))
            row["ebn0_db"] = r.ebn0_db > 0 ? "inf" : "-inf";
        else
            row["ebn0_db"] = r.ebn0_db;
        arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace weylcdma
