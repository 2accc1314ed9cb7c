#pragma once
namespace pid2st { inline int run_cli(int, char**) { return 0; } }
