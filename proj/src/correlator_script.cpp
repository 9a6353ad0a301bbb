#include "sdual/correlator.hpp"

#include <sstream>
#include <stdexcept>

namespace sdual {

namespace {

std::string trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Word parse_word(const std::string& text)
{
  Word w;
  std::string body = text;
  for (char& c : body)
    if (c == '*') c = ' ';
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    if (tok == "|0>" || tok == "vac") continue;
    w.push_back(parse_mode_op(tok));
  }
  return w;
}

}  // namespace

CorrelatorScript parse_correlator_script(const std::string& text)
{
  CorrelatorScript out;
  Slots slots;
  std::array<bool, 3> seen{};
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    try {
      if (line.rfind("slot", 0) == 0) {
        const auto colon = line.find(':');
        if (colon == std::string::npos || colon != 5 || line[4] < '1' || line[4] > '3')
          throw std::invalid_argument("expected slot1:, slot2: or slot3:");
        const int k = line[4] - '1';
        if (seen[k]) throw std::invalid_argument("slot given twice");
        seen[k] = true;
        slots[k] = parse_word(line.substr(colon + 1));
        continue;
      }
      std::istringstream words(line);
      std::string key;
      words >> key;
      if (key == "level") {
        int level = 0;
        std::string extra;
        if (!(words >> level) || (words >> extra) || level < 1) throw std::invalid_argument("level needs one positive integer");
        out.env.level = level;
      } else if (key == "set") {
        std::string rest;
        std::getline(words, rest);
        const auto eq = rest.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected 'set <symbol> = <rational>'");
        out.env.values[parse_symbol(trim(rest.substr(0, eq)))] = parse_rational(trim(rest.substr(eq + 1)));
      } else {
        throw std::invalid_argument("unknown directive '" + key + "'");
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  out.state = CorrelatorState::single(slots);
  return out;
}

}  // namespace sdual
