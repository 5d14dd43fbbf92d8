#include "app.hpp"

int main(int argc, char** argv) { return grlie::cli::run(argc, argv); }
