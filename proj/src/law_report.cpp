#include "opcmlink/law_report.hpp"

#include <sstream>

#include <json.hpp>

namespace opcmlink {

void LawCheck::fail_with(std::vector<Elem> elems, std::string what) {
  status = CheckStatus::fail;
  witnesses.push_back(Witness{std::move(elems), std::move(what)});
}

void LawCheck::used_equivalence(const Elem& a, const Elem& b) {
  if (a != b) equivalences.emplace_back(a, b);
}

bool LawReport::ok() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return false;
  }
  return true;
}

const LawCheck* LawReport::find(const std::string& law) const {
  for (const auto& c : checks) {
    if (c.law == law) return &c;
  }
  return nullptr;
}

LawCheck& LawReport::add(std::string law) {
  checks.push_back(LawCheck{});
  checks.back().law = std::move(law);
  return checks.back();
}

void LawReport::merge(LawReport other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
}

namespace {

std::string tuple_text(const std::vector<Elem>& elems) {
  std::string out = "(";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += display_name(elems[i]);
  }
  out += ")";
  return out;
}

const char* status_text(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::hypothesis_unmet: return "hypothesis unmet";
  }
  return "?";
}

}  // namespace

std::string LawReport::to_text(std::size_t max_witnesses) const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.law << ": " << status_text(c.status) << " (" << c.cases << " cases";
    if (!c.equivalences.empty()) {
      out << ", " << c.equivalences.size() << " up-to-equivalence";
    }
    out << ")";
    if (!c.note.empty()) out << " — " << c.note;
    out << "\n";
    std::size_t shown = 0;
    for (const auto& w : c.witnesses) {
      if (shown == max_witnesses) {
        out << "  ... and " << (c.witnesses.size() - shown) << " more\n";
        break;
      }
      out << "  witness " << tuple_text(w.elems) << ": " << w.note << "\n";
      ++shown;
    }
  }
  return out.str();
}

std::string LawReport::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc;
    jc["law"] = c.law;
    jc["status"] = status_text(c.status);
    jc["cases"] = c.cases;
    if (!c.note.empty()) jc["note"] = c.note;
    jc["equivalences_used"] = c.equivalences.size();
    nlohmann::json jw = nlohmann::json::array();
    for (const auto& w : c.witnesses) {
      jw.push_back({{"elems", w.elems}, {"note", w.note}});
    }
    jc["witnesses"] = jw;
    j.push_back(jc);
  }
  return j.dump(2);
}

}  // namespace opcmlink
