#include "bts/output.hpp"

#include <sstream>

#include "json.hpp"

namespace bts {

using nlohmann::json;

namespace {

std::uint64_t first_index_for(const std::string& kind) {
  if (kind == "tangent") return 1;
  if (kind == "secant" || kind == "bernoulli") return 0;
  throw DomainError("unknown sequence kind '" + kind + "'");
}

}  // namespace

SequenceOutput to_output(const TangentSeq& t) {
  SequenceOutput o{"tangent", t.n(), 1, {}};
  o.values.reserve(t.n());
  for (const auto& v : t.values) o.values.emplace_back(v);
  return o;
}

SequenceOutput to_output(const SecantSeq& s) {
  SequenceOutput o{"secant", s.n(), 0, {}};
  o.values.reserve(s.values.size());
  for (const auto& v : s.values) o.values.emplace_back(v);
  return o;
}

SequenceOutput to_output(const BernoulliSeq& b, std::uint64_t n) {
  return {"bernoulli", n, 0, b.values};
}

std::string format_sequence(const SequenceOutput& seq, Format format) {
  if (format == Format::plain) {
    std::string out;
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
      out += std::to_string(seq.first_index + i);
      out += ' ';
      out += to_string(seq.values[i]);
      out += '\n';
    }
    return out;
  }
  json j;
  j["kind"] = seq.kind;
  j["n"] = seq.n;
  json values = json::array();
  for (const auto& v : seq.values) values.push_back(to_string(v));
  j["values"] = std::move(values);
  return j.dump() + "\n";
}

SequenceOutput parse_plain(const std::string& text) {
  SequenceOutput o;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string index_text, value_text, extra;
    if (!(fields >> index_text >> value_text) || (fields >> extra)) {
      throw DomainError("parse_plain: malformed line " + std::to_string(lineno));
    }
    const BigInt index = parse_bigint(index_text);
    if (o.values.empty()) {
      if (sgn(index) < 0) throw DomainError("parse_plain: negative index");
      o.first_index = index.get_ui();
    } else if (index != o.first_index + o.values.size()) {
      throw DomainError("parse_plain: non-consecutive index on line " +
                        std::to_string(lineno));
    }
    o.values.push_back(parse_rational(value_text));
  }
  return o;
}

SequenceOutput parse_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    SequenceOutput o;
    o.kind = j.at("kind").get<std::string>();
    o.n = j.at("n").get<std::uint64_t>();
    o.first_index = first_index_for(o.kind);
    for (const auto& v : j.at("values")) {
      o.values.push_back(parse_rational(v.get<std::string>()));
    }
    return o;
  } catch (const json::exception& e) {
    throw DomainError(std::string("parse_json: ") + e.what());
  }
}

std::string format_report(const VerificationReport& report, Format format) {
  if (format == Format::json) {
    json j;
    j["n"] = report.n;
    j["all_pass"] = report.all_pass();
    json checks = json::array();
    for (const auto& c : report.checks) {
      json cj{{"name", c.name}, {"pass", c.pass}};
      if (!c.witness.empty()) cj["witness"] = c.witness;
      checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.witness.empty()) out << "  [" << c.witness << "]";
    out << '\n';
  }
  out << (report.all_pass() ? "all checks passed" : "verification FAILED")
      << " (n = " << report.n << ")\n";
  return out.str();
}

}  // namespace bts
