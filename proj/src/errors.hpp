#pragma once

#include <stdexcept>
#include <string>

namespace gmine {

// Base for all pipeline errors. CLI maps these to exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string &msg) : Error("io error: " + msg) {}
};

struct ParseError : Error {
  ParseError(const std::string &file, size_t line, const std::string &msg)
      : Error("parse error: " + file + ":" + std::to_string(line) + ": " + msg),
        line_number(line) {}
  size_t line_number;
};

struct EmptyInput : Error {
  explicit EmptyInput(const std::string &what) : Error("empty input: " + what) {}
};

struct NotInVocabulary : Error {
  explicit NotInVocabulary(const std::string &lemma)
      : Error("not in vocabulary: " + lemma) {}
};

struct MissingAnnotation : Error {
  explicit MissingAnnotation(const std::string &msg)
      : Error("missing annotation: " + msg) {}
};

struct NotAQuantifier : Error {
  explicit NotAQuantifier(const std::string &word)
      : Error("not a positive quantifier: " + word) {}
};

struct NoKeyConcept : Error {
  explicit NoKeyConcept(const std::string &sent)
      : Error("no key concept in: " + sent) {}
};

struct ScorerProtocolError : Error {
  explicit ScorerProtocolError(const std::string &msg)
      : Error("scorer protocol: " + msg) {}
};

struct InsufficientData : Error {
  explicit InsufficientData(const std::string &msg)
      : Error("insufficient data: " + msg) {}
};

struct CalibrationImpossible : Error {
  explicit CalibrationImpossible(const std::string &msg)
      : Error("calibration impossible: " + msg) {}
};

struct ShapeError : Error {
  explicit ShapeError(const std::string &msg) : Error("shape mismatch: " + msg) {}
};

struct DegenerateMarginals : Error {
  explicit DegenerateMarginals(const std::string &msg)
      : Error("degenerate marginals: " + msg) {}
};

struct InsufficientEntries : Error {
  explicit InsufficientEntries(const std::string &msg)
      : Error("insufficient entries: " + msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string &msg) : Error("config: " + msg) {}
};

}  // namespace gmine
