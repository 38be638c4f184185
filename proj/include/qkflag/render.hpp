#pragma once

#include <string>

#include "json.hpp"
#include "qkflag/conjecture.hpp"
#include "qkflag/flags.hpp"
#include "qkflag/qkring.hpp"
#include "qkflag/verify.hpp"

namespace qkflag {

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(const std::string& s);
std::string to_string(OutputFormat f);

// "Q1", "Q1^2Q2", "" for degree zero
std::string render_monomial(CurveDegree d);
std::string render_poly(const NovikovPolynomial& p);

// Terms ordered by Novikov degree, then codimension, then basis position. Zero renders as "0".
std::string render_class(const QKClass& c, int n);
std::string render_class(const KClass& c, int n);
std::string render_product(SchubertIndex u, SchubertIndex v, const QKClass& c, int n);
std::string render_product(SchubertIndex u, SchubertIndex v, const KClass& c, int n);

nlohmann::json poly_to_json(const NovikovPolynomial& p);
NovikovPolynomial poly_from_json(const nlohmann::json& j);
nlohmann::json class_to_json(const QKClass& c, int n);
QKClass class_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const MultiplicationTable& table);
MultiplicationTable table_from_json(const nlohmann::json& j);
MultiplicationTable load_table(const std::string& path);

std::string render_table(const MultiplicationTable& table, OutputFormat format);

std::string render_report(const VerificationReport& r, OutputFormat format);
std::string render_report(const DiffReport& r, OutputFormat format);
std::string render_report(const ArbitrationReport& r, OutputFormat format);
std::string render_sequences(const AdmissibleSequenceSet& A, OutputFormat format);

}  // namespace qkflag
