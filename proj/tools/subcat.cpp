// subcat.cpp : command-line entry point

#include "subcat/cli.hpp"

int main(int argc, char** argv) { return subcat::run(argc, argv); }
