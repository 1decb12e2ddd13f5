#include "mnlck/cli.hpp"

int main(int argc, char** argv) {
  return mnlck::cli::run({argv + 1, argv + argc}).exit_code;
}
