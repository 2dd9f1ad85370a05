// Regenerates the golden group fixtures under tests/fixtures/.
#include <fstream>
#include <iostream>

#include "alcove/json_io.hpp"

using namespace alcove;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_fixtures <output-dir>\n";
    return 64;
  }
  std::string dir = argv[1];
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "D5",
                           "E6", "E7", "E8", "F4", "G2"}) {
    Family fam = family_from_letter(name[0]);
    int rank = std::atoi(name + 1);
    RootSystem rs = RootSystem::build({fam, rank});
    json j = group_fixture(rs);
    if (std::string(name) == "D4") {
      j["note"] =
          "Sliced fundamental polytope keeps the origin as a vertex: "
          "|vert| = |vert KP| - 4 = 5 with vertex list {0, w1/2, w2/2, "
          "(w1+w3)/3, (w1+w3+w4)/4}.";
    }
    std::ofstream out(dir + "/" + name + ".json");
    out << j.dump(2) << "\n";
    std::cout << "wrote " << name << ".json\n";
  }
  return 0;
}
