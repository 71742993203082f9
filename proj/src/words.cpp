#include "surfrep/words.hpp"

#include <sstream>
#include <stdexcept>

namespace surfrep {

Letter inverse_letter(Letter l) { return {l.index, -l.sign}; }

void check_genus(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
}

static void check_letter(int genus, Letter l) {
  if (l.index < 1 || l.index > 2 * genus)
    throw std::invalid_argument("letter index out of range for genus");
  if (l.sign != 1 && l.sign != -1)
    throw std::invalid_argument("letter sign must be +1 or -1");
}

void check_same_genus(const Word& a, const Word& b) {
  if (a.genus() != b.genus()) throw std::invalid_argument("genus mismatch");
}

Word::Word(int genus) : genus_(genus) { check_genus(genus); }

Word::Word(int genus, std::vector<Letter> letters) : genus_(genus) {
  check_genus(genus);
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    check_letter(genus, l);
    if (!letters_.empty() && letters_.back() == inverse_letter(l))
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word reduce(int genus, const std::vector<Letter>& raw) {
  return Word(genus, raw);
}

Word multiply(const Word& a, const Word& b) {
  check_same_genus(a, b);
  std::vector<Letter> cat = a.letters();
  cat.insert(cat.end(), b.letters().begin(), b.letters().end());
  return Word(a.genus(), std::move(cat));
}

Word inverse(const Word& w) {
  std::vector<Letter> rev(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : rev) l = inverse_letter(l);
  return Word(w.genus(), std::move(rev));
}

Word generator(int genus, int index, int sign) {
  check_genus(genus);
  check_letter(genus, {index, sign});
  return Word(genus, {Letter{index, sign}});
}

std::vector<long long> exponent_sums(const Word& w) {
  std::vector<long long> sums(2 * w.genus(), 0);
  for (Letter l : w.letters()) sums[l.index - 1] += l.sign;
  return sums;
}

static Letter parse_letter_token(const std::string& tok, int genus) {
  if (tok.size() < 2 || tok[0] != 'x')
    throw std::invalid_argument("bad word token: " + tok);
  int sign = 1;
  std::string digits = tok.substr(1);
  auto caret = digits.find("^-1");
  if (caret != std::string::npos) {
    if (caret + 3 != digits.size())
      throw std::invalid_argument("bad word token: " + tok);
    digits = digits.substr(0, caret);
    sign = -1;
  }
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad word token: " + tok);
  int index = std::stoi(digits);
  check_letter(genus, {index, sign});
  return {index, sign};
}

Word parse_word(const std::string& text, int genus) {
  check_genus(genus);
  std::vector<Letter> letters;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok.front() == '[') {
      if (tok.back() != ']')
        throw std::invalid_argument("bad commutator token: " + tok);
      auto comma = tok.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("bad commutator token: " + tok);
      Letter a = parse_letter_token(tok.substr(1, comma - 1), genus);
      Letter b = parse_letter_token(
          tok.substr(comma + 1, tok.size() - comma - 2), genus);
      letters.push_back(a);
      letters.push_back(b);
      letters.push_back(inverse_letter(a));
      letters.push_back(inverse_letter(b));
      continue;
    }
    letters.push_back(parse_letter_token(tok, genus));
  }
  return Word(genus, std::move(letters));
}

std::string print_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

FormalWordSum::FormalWordSum(int genus) : genus_(genus) { check_genus(genus); }

void FormalWordSum::add(const Word& w, int coeff) {
  if (genus_ == 0) genus_ = w.genus();
  if (w.genus() != genus_) throw std::invalid_argument("genus mismatch");
  if (coeff == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, coeff);
  } else if ((it->second += coeff) == 0) {
    terms_.erase(it);
  }
}

long long FormalWordSum::coefficient_mass() const {
  long long mass = 0;
  for (const auto& [w, c] : terms_) mass += c;
  return mass;
}

FormalWordSum single(const Word& w, int coeff) {
  FormalWordSum s(w.genus());
  s.add(w, coeff);
  return s;
}

FormalWordSum operator+(const FormalWordSum& a, const FormalWordSum& b) {
  FormalWordSum out = a;
  for (const auto& [w, c] : b.terms()) out.add(w, c);
  return out;
}

FormalWordSum operator-(const FormalWordSum& a, const FormalWordSum& b) {
  FormalWordSum out = a;
  for (const auto& [w, c] : b.terms()) out.add(w, -c);
  return out;
}

FormalWordSum left_multiply(const Word& u, const FormalWordSum& s) {
  FormalWordSum out;
  for (const auto& [w, c] : s.terms()) out.add(multiply(u, w), c);
  return out;
}

std::string print_sum(const FormalWordSum& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : s.terms()) {
    if (!out.empty()) out += ' ';
    out += (c < 0) ? '-' : '+';
    int mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += '[' + print_word(w) + ']';
  }
  return out;
}

}  // namespace surfrep
