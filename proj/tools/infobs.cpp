#include "infobs/cli.hpp"

int main(int argc, char** argv) {
  return infobs::run_cli(argc, argv);
}
