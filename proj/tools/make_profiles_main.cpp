// Regenerates the shipped language-profile files from seed texts.
// Usage: gmine-make-profiles <seed_dir> <out_dir>
// Seed files are named seed_<lang>.txt.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cleaning.hpp"
#include "errors.hpp"

namespace fs = std::filesystem;

int main(int argc, char **argv) {
  if (argc != 3) {
    std::cerr << "usage: gmine-make-profiles <seed_dir> <out_dir>\n";
    return 1;
  }
  try {
    fs::create_directories(argv[2]);
    size_t built = 0;
    std::vector<fs::path> seeds;
    for (const auto &e : fs::directory_iterator(argv[1])) {
      std::string stem = e.path().stem().string();
      if (e.path().extension() == ".txt" && stem.rfind("seed_", 0) == 0)
        seeds.push_back(e.path());
    }
    std::sort(seeds.begin(), seeds.end());
    for (const fs::path &p : seeds) {
      std::string lang = p.stem().string().substr(5);
      std::ifstream in(p, std::ios::binary);
      std::ostringstream text;
      text << in.rdbuf();
      gmine::LanguageProfile profile =
          gmine::build_profile(lang, text.str());
      gmine::save_profile(profile, std::string(argv[2]) + "/" + lang + ".txt");
      std::cout << lang << ": " << profile.size() << " trigrams\n";
      ++built;
    }
    if (built == 0) {
      std::cerr << "no seed_<lang>.txt files in " << argv[1] << "\n";
      return 1;
    }
    return 0;
  } catch (const std::exception &e) {
    std::cerr << "gmine-make-profiles: " << e.what() << "\n";
    return 2;
  }
}
