#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace opberg {

struct TaggerSpec {
  /// Program and arguments; the program is looked up on PATH.
  std::vector<std::string> argv;
  std::chrono::milliseconds timeout{30000};
};

/// Child process speaking the line protocol: one request line of
/// space-joined tokens on stdin, one response line of space-joined tags on
/// stdout. Not thread-safe; use one instance per worker.
class ExternalTagger {
 public:
  /// Starts the child. Throws ConnectionError if it cannot be spawned.
  explicit ExternalTagger(TaggerSpec spec);
  ~ExternalTagger();
  ExternalTagger(const ExternalTagger&) = delete;
  ExternalTagger& operator=(const ExternalTagger&) = delete;

  /// Throws ConnectionError (child gone), ProtocolError (token with
  /// whitespace, or tag count differs from token count) or TimeoutError.
  /// After a timeout or protocol error the child is stopped.
  std::vector<std::string> tag(const std::vector<std::string>& tokens);

 private:
  void shutdown();

  TaggerSpec spec_;
  int fd_ = -1;
  int pid_ = -1;
  std::string pending_;
};

/// One-shot convenience wrapper.
std::vector<std::string> external_tag(const std::vector<std::string>& tokens,
                                      const TaggerSpec& spec);

}  // namespace opberg
