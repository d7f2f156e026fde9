#include "wgqed/app/commands.hpp"

int main(int argc, char** argv) { return wgqed::app::run(argc, argv); }
