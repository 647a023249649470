#pragma once

namespace bigindec {

int run_cli(int argc, char** argv);

}  // namespace bigindec
