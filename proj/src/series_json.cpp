#include "gtcomb/series_json.hpp"

namespace gtcomb {

nlohmann::ordered_json series_to_json(const GTSeries& series) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [key, coeff] : series.terms()) {
    nlohmann::ordered_json term;
    term["chi"] = key.chi;
    term["degree"] = key.degree;
    nlohmann::ordered_json contacts = nlohmann::ordered_json::array();
    for (const ContactTuple& s : key.contacts) contacts.push_back(s.orders());
    term["contacts"] = std::move(contacts);
    nlohmann::ordered_json words = nlohmann::ordered_json::array();
    for (const HomologyWord& w : key.words) {
      nlohmann::ordered_json labels = nlohmann::ordered_json::array();
      for (int letter : w.letters)
        labels.push_back(series.basis()->cls(letter).label);
      words.push_back(std::move(labels));
    }
    term["words"] = std::move(words);
    term["coeff"] = rat_repr(coeff);
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace gtcomb
