#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfa {

// Dense state ids, 0..|Q|-1.
using StateId = int;

// A word over the alphabet; the empty string is the empty word.
using Word = std::string;

// Exact arithmetic for cycle/path counts and rank values. Path counts are
// products of arc multiplicities along chains, so they grow multiplicatively
// and can overflow any fixed-width type on adversarial inputs.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount reduced_rank(const BigCount& rank) {
  return rank > 1 ? BigCount(rank - 1) : BigCount(0);
}

constexpr std::size_t kDefaultBudget = 1'000'000;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class NotDeterministic : public Error {
 public:
  using Error::Error;
};

class NotTrim : public Error {
 public:
  using Error::Error;
};

class NotMonoidal : public Error {
 public:
  using Error::Error;
};

class CycleAvoidsRoot : public Error {
 public:
  CycleAvoidsRoot(const std::string& what, std::vector<StateId> witness_cycle)
      : Error(what), witness(std::move(witness_cycle)) {}
  std::vector<StateId> witness;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t budget_cap)
      : Error(what), cap(budget_cap) {}
  std::size_t cap;
};

class CycleDetected : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class BpiCountMismatch : public Error {
 public:
  using Error::Error;
};

class UndefinedRank : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string origin_name, int line_no)
      : Error(origin_name + ":" + std::to_string(line_no) + ": " + what),
        origin(std::move(origin_name)),
        line(line_no) {}
  std::string origin;
  int line;
};

// Ordered set of single-character letters. Order is the declaration order and
// is significant for equality.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::string letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(letters_[i]);
      if (!std::isgraph(c)) {
        throw Error("alphabet letters must be printable non-space characters");
      }
      if (letters_.find(letters_[i], i + 1) != std::string::npos) {
        throw Error(std::string("duplicate letter '") + letters_[i] +
                    "' in alphabet");
      }
    }
  }

  std::size_t size() const { return letters_.size(); }
  const std::string& letters() const { return letters_; }

  bool contains(char c) const {
    return letters_.find(c) != std::string::npos;
  }

  bool contains_word(const Word& w) const {
    for (char c : w) {
      if (!contains(c)) return false;
    }
    return true;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

}  // namespace sfa
