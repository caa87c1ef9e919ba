#pragma once

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace beauville {

// Freely reduced word over named generators, e.g. "a b^-1 a^-1 b".
class Word {
 public:
  struct Letter {
    char gen;
    int exp;  // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
  };

  Word() = default;

  static Word letter(char gen, int exp = 1) {
    Word w;
    if (exp > 0) {
      for (int i = 0; i < exp; ++i) w.push({gen, 1});
    } else {
      for (int i = 0; i < -exp; ++i) w.push({gen, -1});
    }
    return w;
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  friend Word operator*(Word a, const Word& b) {
    for (const auto& l : b.letters_) a.push(l);
    return a;
  }

  Word inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push({it->gen, -it->exp});
    return w;
  }

  Word pow(long long k) const {
    Word base = k < 0 ? inverse() : *this;
    Word acc;
    for (long long i = 0; i < std::llabs(k); ++i) acc = acc * base;
    return acc;
  }

  // w^c = c^-1 w c.
  Word conjugated_by(const Word& c) const { return c.inverse() * *this * c; }

  // Evaluates with one value per generator name.
  template <class Element, class Lookup>
  Element evaluate(const Element& identity, Lookup&& value_of) const {
    Element acc = identity;
    for (const auto& l : letters_) {
      const Element& g = value_of(l.gen);
      acc = acc * (l.exp > 0 ? g : g.inverse());
    }
    return acc;
  }

  // Runs of equal letters are collapsed into powers.
  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < letters_.size()) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      auto run = static_cast<long long>(j - i) * letters_[i].exp;
      if (!first) os << ' ';
      first = false;
      os << letters_[i].gen;
      if (run != 1) os << '^' << run;
      i = j;
    }
    return os.str();
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(Letter l) {
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  std::vector<Letter> letters_;
};

}  // namespace beauville
