// Line-protocol tagger for tests. Modes:
//   echo <TAG>  one TAG per token
//   short       one tag fewer than tokens
//   silent      reads requests, never answers
//   exit        exits at once
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

int main(int argc, char** argv) {
  const std::string mode = argc > 1 ? argv[1] : "echo";
  const std::string tag = argc > 2 ? argv[2] : "NN";
  if (mode == "exit") return 0;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (mode == "silent") {
      std::this_thread::sleep_for(std::chrono::seconds(60));
      continue;
    }
    std::istringstream in(line);
    std::size_t count = 0;
    for (std::string w; in >> w;) ++count;
    if (mode == "short" && count > 0) --count;
    for (std::size_t t = 0; t < count; ++t) std::cout << (t ? " " : "") << tag;
    std::cout << '\n' << std::flush;
  }
  return 0;
}
