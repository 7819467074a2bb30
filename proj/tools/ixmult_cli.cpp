#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ixmult/errors.hpp"
#include "ixmult/script.hpp"

int main(int argc, char** argv) {
    CLI::App app{"intersection multiplicities of affine and projective schemes over Q"};
    std::string path;
    std::string format = "text";
    app.add_option("script", path, "script file ('-' reads stdin)")->required();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    CLI11_PARSE(app, argc, argv);

    std::string source;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        source = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open '" << path << "'\n";
            return 1;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        source = buf.str();
    }

    try {
        std::cout << ixm::run_script(source, format == "json");
        return 0;
    } catch (const ixm::UserError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
