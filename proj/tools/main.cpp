#include "commands.hpp"

int main(int argc, char** argv) {
  return subgrad::cli::cli_main(argc, argv);
}
