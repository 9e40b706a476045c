#include "lexnorm/cli.hpp"

int main(int argc, char** argv) {
    return lexnorm::cli::main_impl(argc, argv);
}
