// Copyright 2026 The Privwrap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "privwrap/plugin.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>

namespace privwrap {

PluginSpec parse_plugin_spec(const std::string& command_line,
                             double timeout_sec) {
  PluginSpec spec;
  spec.timeout_sec = timeout_sec;
  std::istringstream in(command_line);
  std::string tok;
  while (in >> tok) spec.argv.push_back(tok);
  if (spec.argv.empty()) throw ParamError("empty plugin command");
  return spec;
}

namespace {

class PluginProcess {
 public:
  explicit PluginProcess(PluginSpec spec) : spec_(std::move(spec)) {}

  ~PluginProcess() {
    if (pid_ > 0) {
      close(to_child_);
      close(from_child_);
      kill(pid_, SIGKILL);
      int status = 0;
      waitpid(pid_, &status, 0);
    }
  }

  double query(const std::string& line) {
    if (pid_ < 0) start();
    std::string msg = line;
    msg.push_back('\n');
    write_all(msg);
    const std::string reply = read_line();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(reply.c_str(), &end);
    // Accept trailing whitespace only.
    while (end && *end != '\0' && (*end == ' ' || *end == '\t' || *end == '\r')) {
      ++end;
    }
    if (end == reply.c_str() || (end && *end != '\0')) {
      throw PluginError("plugin replied with a non-number: '" + reply + "'");
    }
    return v;
  }

 private:
  void start() {
    int to_child[2], from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0) {
      throw PluginError("failed to create plugin pipes");
    }
    pid_ = fork();
    if (pid_ < 0) throw PluginError("failed to fork plugin process");
    if (pid_ == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      std::vector<char*> argv;
      for (auto& a : spec_.argv) argv.push_back(const_cast<char*>(a.c_str()));
      argv.push_back(nullptr);
      execvp(argv[0], argv.data());
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    to_child_ = to_child[1];
    from_child_ = from_child[0];
    signal(SIGPIPE, SIG_IGN);
  }

  void write_all(const std::string& data) {
    std::size_t off = 0;
    while (off < data.size()) {
      const ssize_t w = write(to_child_, data.data() + off, data.size() - off);
      if (w < 0) {
        if (errno == EINTR) continue;
        throw PluginError("plugin stdin closed (process crashed?)");
      }
      off += static_cast<std::size_t>(w);
    }
  }

  std::string read_line() {
    const int timeout_ms = static_cast<int>(spec_.timeout_sec * 1000.0);
    for (;;) {
      const std::size_t nl = buffer_.find('\n');
      if (nl != std::string::npos) {
        std::string line = buffer_.substr(0, nl);
        buffer_.erase(0, nl + 1);
        return line;
      }
      struct pollfd pfd{from_child_, POLLIN, 0};
      const int pr = poll(&pfd, 1, timeout_ms);
      if (pr == 0) {
        throw PluginError("plugin timed out after " +
                          std::to_string(spec_.timeout_sec) + "s");
      }
      if (pr < 0) {
        if (errno == EINTR) continue;
        throw PluginError("poll on plugin pipe failed");
      }
      char chunk[4096];
      const ssize_t r = read(from_child_, chunk, sizeof(chunk));
      if (r == 0) throw PluginError("plugin closed its output (EOF)");
      if (r < 0) {
        if (errno == EINTR) continue;
        throw PluginError("read from plugin failed");
      }
      buffer_.append(chunk, static_cast<std::size_t>(r));
    }
  }

  PluginSpec spec_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

}  // namespace

Evaluator bind_plugin(const PluginSpec& spec) {
  auto proc = std::make_shared<PluginProcess>(spec);
  return [proc](const SubsetQuery& q) { return proc->query(q.kept_line()); };
}

}  // namespace privwrap
