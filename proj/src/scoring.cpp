#include "scoring.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <unordered_map>

#include "errors.hpp"
#include "text_util.hpp"

namespace gmine {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

class ConstantScorer final : public Scorer {
 public:
  explicit ConstantScorer(double v) : value_(clamp01(v)) {}
  ScorerKind kind() const override { return ScorerKind::Constant; }
  std::vector<double> score(const std::vector<std::string> &in) override {
    return std::vector<double>(in.size(), value_);
  }

 private:
  double value_;
};

class TableJoinScorer final : public Scorer {
 public:
  TableJoinScorer(const std::string &path, double default_score)
      : default_(clamp01(default_score)) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open score table " + path);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      size_t tab = line.rfind('\t');
      if (tab == std::string::npos)
        throw ParseError(path, line_no, "expected <sentence>\\t<score>");
      char *end = nullptr;
      double v = std::strtod(line.c_str() + tab + 1, &end);
      if (end == line.c_str() + tab + 1)
        throw ParseError(path, line_no, "bad score");
      table_[normalize_sentence_key(line.substr(0, tab))] = clamp01(v);
    }
  }

  ScorerKind kind() const override { return ScorerKind::TableJoin; }

  std::vector<double> score(const std::vector<std::string> &in) override {
    std::vector<double> out;
    out.reserve(in.size());
    for (const std::string &s : in) {
      auto it = table_.find(normalize_sentence_key(s));
      if (it == table_.end()) {
        ++misses_;
        out.push_back(default_);
      } else {
        out.push_back(it->second);
      }
    }
    return out;
  }

  size_t misses() const override { return misses_; }

 private:
  std::unordered_map<std::string, double> table_;
  double default_;
  size_t misses_ = 0;
};

// Child process speaking the line protocol over stdin/stdout.
class LineProcess {
 public:
  explicit LineProcess(const std::string &command) {
    int to_child[2], from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0)
      throw ScorerProtocolError("pipe failed");
    pid_ = fork();
    if (pid_ < 0) throw ScorerProtocolError("fork failed");
    if (pid_ == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      execl("/bin/sh", "sh", "-c", command.c_str(), (char *)nullptr);
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    in_fd_ = to_child[1];
    out_fd_ = from_child[0];
  }

  ~LineProcess() {
    if (in_fd_ >= 0) close(in_fd_);
    if (out_fd_ >= 0) close(out_fd_);
    if (pid_ > 0) waitpid(pid_, nullptr, 0);
  }

  void send(const std::string &line) {
    std::string buf = line;
    buf.push_back('\n');
    size_t off = 0;
    while (off < buf.size()) {
      ssize_t n = write(in_fd_, buf.data() + off, buf.size() - off);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw ScorerProtocolError("child closed its input");
      }
      off += (size_t)n;
    }
  }

  std::string receive() {
    std::string line;
    while (true) {
      size_t nl = buffer_.find('\n');
      if (nl != std::string::npos) {
        line = buffer_.substr(0, nl);
        buffer_.erase(0, nl + 1);
        return line;
      }
      char chunk[4096];
      ssize_t n = read(out_fd_, chunk, sizeof chunk);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw ScorerProtocolError("read from child failed");
      }
      if (n == 0) throw ScorerProtocolError("child exited mid-stream");
      buffer_.append(chunk, (size_t)n);
    }
  }

 private:
  pid_t pid_ = -1;
  int in_fd_ = -1;
  int out_fd_ = -1;
  std::string buffer_;
};

class ExternalScorer final : public Scorer {
 public:
  explicit ExternalScorer(std::string command) : command_(std::move(command)) {}
  ScorerKind kind() const override { return ScorerKind::ExternalProcess; }

  std::vector<double> score(const std::vector<std::string> &in) override {
    if (!proc_) proc_ = std::make_unique<LineProcess>(command_);
    std::vector<double> out;
    out.reserve(in.size());
    for (const std::string &s : in) {
      // Newlines cannot cross the line protocol; sentences never contain
      // them after cleaning, but flatten defensively.
      std::string flat = s;
      std::replace(flat.begin(), flat.end(), '\n', ' ');
      proc_->send(flat);
      std::string reply = receive_trimmed();
      char *end = nullptr;
      double v = std::strtod(reply.c_str(), &end);
      if (end == reply.c_str() || *end != '\0')
        throw ScorerProtocolError("non-numeric reply: '" + reply + "'");
      out.push_back(clamp01(v));
    }
    return out;
  }

 private:
  std::string receive_trimmed() {
    std::string r = proc_->receive();
    while (!r.empty() && (r.back() == '\r' || r.back() == ' ')) r.pop_back();
    return r;
  }

  std::string command_;
  std::unique_ptr<LineProcess> proc_;
};

}  // namespace

std::unique_ptr<Scorer> Scorer::constant(double value) {
  return std::make_unique<ConstantScorer>(value);
}

std::unique_ptr<Scorer> Scorer::table_join(const std::string &path,
                                           double default_score) {
  return std::make_unique<TableJoinScorer>(path, default_score);
}

std::unique_ptr<Scorer> Scorer::external(const std::string &command) {
  return std::make_unique<ExternalScorer>(command);
}

std::unique_ptr<Scorer> Scorer::from_spec(const std::string &spec) {
  size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw ConfigError("scorer spec needs '<kind>:<arg>': " + spec);
  std::string kind = spec.substr(0, colon);
  std::string arg = spec.substr(colon + 1);
  if (kind == "constant") {
    char *end = nullptr;
    double v = std::strtod(arg.c_str(), &end);
    if (end == arg.c_str()) throw ConfigError("bad constant score: " + arg);
    return constant(v);
  }
  if (kind == "table") return table_join(arg);
  if (kind == "process") return external(arg);
  throw ConfigError("unknown scorer kind: " + kind);
}

std::vector<LabeledSentence> read_annotations(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open annotations " + path);
  std::vector<LabeledSentence> out;
  std::string line;
  size_t line_no = 0;
  auto parse_label = [&](const std::string &s) {
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || (v != 0.0 && v != 0.5 && v != 1.0))
      throw ParseError(path, line_no, "label must be 1, 0.5 or 0");
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 3)
      throw ParseError(path, line_no, "expected sentence\\tlabel_a\\tlabel_b");
    out.push_back({cols[0], parse_label(cols[1]), parse_label(cols[2])});
  }
  return out;
}

double calibrate_threshold(const std::vector<std::pair<double, double>> &pairs,
                           double target, int n_bins) {
  if (pairs.size() < 50)
    throw InsufficientData("calibration needs >= 50 pairs, got " +
                           std::to_string(pairs.size()));
  if (!(target > 0.0 && target < 1.0))
    throw ConfigError("calibration target must lie in (0,1)");

  double width = 1.0 / n_bins;
  std::vector<double> sums(n_bins, 0.0);
  std::vector<double> counts(n_bins, 0.0);
  for (auto [score, label] : pairs) {
    int b = std::min((int)(clamp01(score) / width), n_bins - 1);
    sums[b] += label;
    counts[b] += 1.0;
  }

  // Pool adjacent violators over the non-empty bins.
  struct Block {
    double sum, weight;
    int last_bin;
  };
  std::vector<Block> stack;
  for (int b = 0; b < n_bins; ++b) {
    if (counts[b] == 0.0) continue;
    Block blk{sums[b], counts[b], b};
    while (!stack.empty() && stack.back().sum / stack.back().weight >=
                                 blk.sum / blk.weight) {
      blk.sum += stack.back().sum;
      blk.weight += stack.back().weight;
      stack.pop_back();
    }
    stack.push_back(blk);
  }

  int prev_end = -1;
  for (const Block &blk : stack) {
    double mean = blk.sum / blk.weight;
    if (mean >= target) {
      // First bin of this pooled block that is non-empty.
      for (int b = prev_end + 1; b <= blk.last_bin; ++b)
        if (counts[b] > 0.0) return b * width;
    }
    prev_end = blk.last_bin;
  }
  throw CalibrationImpossible("no bin reaches mean label " +
                              std::to_string(target));
}

AgreementStats agreement_stats(const std::vector<double> &labels_a,
                               const std::vector<double> &labels_b) {
  if (labels_a.size() != labels_b.size())
    throw ShapeError("label vectors differ in length");
  if (labels_a.empty()) throw ShapeError("label vectors are empty");

  size_t n = labels_a.size();
  size_t matches = 0;
  std::map<double, double> ma, mb;
  for (size_t i = 0; i < n; ++i) {
    if (labels_a[i] == labels_b[i]) ++matches;
    ma[labels_a[i]] += 1.0;
    mb[labels_b[i]] += 1.0;
  }
  double p_o = (double)matches / (double)n;
  double p_e = 0.0;
  for (const auto &[cat, ca] : ma) {
    auto it = mb.find(cat);
    if (it != mb.end()) p_e += (ca / n) * (it->second / n);
  }

  AgreementStats stats;
  stats.joint_agreement = p_o;
  if (p_e >= 1.0) {
    if (p_o >= 1.0) {
      stats.cohens_kappa = 1.0;
      return stats;
    }
    throw DegenerateMarginals("chance agreement is 1 with observed < 1");
  }
  stats.cohens_kappa = (p_o - p_e) / (1.0 - p_e);
  return stats;
}

}  // namespace gmine
