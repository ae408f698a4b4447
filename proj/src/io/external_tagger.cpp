#include "opberg/external_tagger.hpp"

#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <sstream>
#include <thread>

#include "opberg/error.hpp"

extern char** environ;

namespace opberg {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

ExternalTagger::ExternalTagger(TaggerSpec spec) : spec_(std::move(spec)) {
  if (spec_.argv.empty()) throw ConnectionError("tagger command is empty");
  int fds[2];
  if (socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
    throw ConnectionError(std::string("socketpair: ") + std::strerror(errno));
  }

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, fds[1], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, fds[1], STDOUT_FILENO);

  std::vector<char*> argv;
  for (auto& arg : spec_.argv) argv.push_back(arg.data());
  argv.push_back(nullptr);

  pid_t pid = -1;
  const int rc = posix_spawnp(&pid, argv[0], &actions, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  close(fds[1]);
  if (rc != 0) {
    close(fds[0]);
    throw ConnectionError("cannot start tagger '" + spec_.argv[0] + "': " + std::strerror(rc));
  }
  fd_ = fds[0];
  pid_ = pid;
}

ExternalTagger::~ExternalTagger() { shutdown(); }

void ExternalTagger::shutdown() {
  if (fd_ >= 0) close(fd_);
  fd_ = -1;
  if (pid_ <= 0) return;
  // Closing our end is the normal stop signal; escalate if the child lingers.
  const auto deadline = Clock::now() + std::chrono::milliseconds(200);
  while (waitpid(pid_, nullptr, WNOHANG) == 0) {
    if (Clock::now() > deadline) {
      kill(pid_, SIGKILL);
      waitpid(pid_, nullptr, 0);
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
  }
  pid_ = -1;
}

std::vector<std::string> ExternalTagger::tag(const std::vector<std::string>& tokens) {
  if (fd_ < 0) throw ConnectionError("tagger is not running");
  std::string request;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].empty() || tokens[i].find_first_of(" \t\r\n") != std::string::npos) {
      throw ProtocolError("token " + std::to_string(i) + " is empty or contains whitespace");
    }
    if (i > 0) request += ' ';
    request += tokens[i];
  }
  request += '\n';

  for (std::size_t sent = 0; sent < request.size();) {
    const ssize_t w = send(fd_, request.data() + sent, request.size() - sent, MSG_NOSIGNAL);
    if (w < 0) {
      if (errno == EINTR) continue;
      shutdown();
      throw ConnectionError(std::string("tagger write failed: ") + std::strerror(errno));
    }
    sent += static_cast<std::size_t>(w);
  }

  const auto deadline = Clock::now() + spec_.timeout;
  std::size_t newline;
  while ((newline = pending_.find('\n')) == std::string::npos) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    pollfd p{fd_, POLLIN, 0};
    const int ready = left.count() > 0 ? poll(&p, 1, static_cast<int>(left.count())) : 0;
    if (ready < 0 && errno == EINTR) continue;
    if (ready <= 0) {
      shutdown();
      throw TimeoutError("tagger did not answer within " + std::to_string(spec_.timeout.count()) +
                         " ms");
    }
    char buf[4096];
    const ssize_t r = recv(fd_, buf, sizeof buf, 0);
    if (r < 0 && errno == EINTR) continue;
    if (r <= 0) {
      shutdown();
      throw ConnectionError("tagger closed the connection");
    }
    pending_.append(buf, static_cast<std::size_t>(r));
  }
  std::string line = pending_.substr(0, newline);
  pending_.erase(0, newline + 1);

  auto tags = split_words(line);
  if (tags.size() != tokens.size()) {
    shutdown();
    throw ProtocolError("tagger returned " + std::to_string(tags.size()) + " tags for " +
                        std::to_string(tokens.size()) + " tokens");
  }
  return tags;
}

std::vector<std::string> external_tag(const std::vector<std::string>& tokens,
                                      const TaggerSpec& spec) {
  ExternalTagger tagger(spec);
  return tagger.tag(tokens);
}

}  // namespace opberg
