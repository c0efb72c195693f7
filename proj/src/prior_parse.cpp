#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "nnhm/errors.hpp"
#include "nnhm/prior.hpp"
#include "nnhm/toolkit.hpp"

namespace nnhm {

namespace {

struct Arg {
  std::string key;
  double value = 0.0;
};

double to_number(const std::string& s, std::string_view whole) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError("bad number '" + s + "' in prior spec '" + std::string(whole) + "'");
  return v;
}

std::vector<Arg> split_args(const std::string& body, std::string_view whole) {
  std::vector<Arg> out;
  if (body.empty()) return out;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    Arg a;
    if (auto eq = item.find('='); eq != std::string::npos) {
      a.key = item.substr(0, eq);
      item = item.substr(eq + 1);
    }
    a.value = to_number(item, whole);
    out.push_back(a);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void expect_count(const std::vector<Arg>& args, std::size_t n, const std::string& name, std::string_view whole) {
  if (args.size() != n)
    throw InputError(name + " expects " + std::to_string(n) + " argument(s): '" + std::string(whole) + "'");
  for (const auto& a : args)
    if (!a.key.empty()) throw InputError("unexpected keyword '" + a.key + "' in '" + std::string(whole) + "'");
}

}  // namespace

Prior parse_prior(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s.empty()) throw InputError("empty prior spec");

  auto open = s.find('(');
  if (open == std::string::npos) {
    if (s == "uniform") return Prior::improper_uniform();
    if (s == "jeffreys") return Prior::jeffreys();
    return preset(s);
  }
  if (s.back() != ')') throw InputError("prior spec must end with ')': '" + std::string(text) + "'");
  std::string name = s.substr(0, open);
  name.erase(std::remove_if(name.begin(), name.end(), [](char c) { return c == '-' || c == '_'; }), name.end());
  auto args = split_args(s.substr(open + 1, s.size() - open - 2), text);

  if (name == "halfnormal") {
    expect_count(args, 1, name, text);
    return Prior::half_normal(args[0].value);
  }
  if (name == "halfstudentt" || name == "halft") {
    expect_count(args, 2, name, text);
    return Prior::half_student_t(args[0].value, args[1].value);
  }
  if (name == "halfcauchy") {
    expect_count(args, 1, name, text);
    return Prior::half_cauchy(args[0].value);
  }
  if (name == "halflogistic") {
    expect_count(args, 1, name, text);
    return Prior::half_logistic(args[0].value);
  }
  if (name == "exponential") {
    if (args.size() != 1) throw InputError("exponential expects one argument: '" + std::string(text) + "'");
    const auto& a = args[0];
    if (a.key.empty() || a.key == "rate") return Prior::exponential(a.value);
    if (a.key == "scale") return Prior::exponential_scale(a.value);
    throw InputError("exponential accepts rate= or scale=, got '" + a.key + "'");
  }
  if (name == "lomax") {
    expect_count(args, 2, name, text);
    return Prior::lomax(args[0].value, args[1].value);
  }
  if (name == "lognormal") {
    expect_count(args, 2, name, text);
    return Prior::log_normal(args[0].value, args[1].value);
  }
  if (name == "logstudentt" || name == "logt") {
    expect_count(args, 3, name, text);
    return Prior::log_student_t(args[0].value, args[1].value, args[2].value);
  }
  if (name == "uniform") {
    if (args.empty()) return Prior::improper_uniform();
    expect_count(args, 1, name, text);
    return Prior::uniform(args[0].value);
  }
  if (name == "jeffreys") {
    expect_count(args, 0, name, text);
    return Prior::jeffreys();
  }
  throw InputError("unknown prior family '" + name + "'");
}

}  // namespace nnhm
