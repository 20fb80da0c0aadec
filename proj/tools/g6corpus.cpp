// g6corpus: print one graph6 line per isomorphism class of graphs on n
// vertices (n <= 7). Used to build and regenerate the test corpora.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cendom/enumerate.hpp"
#include "cendom/format.hpp"

int main(int argc, char** argv) {
    CLI::App app{"enumerate non-isomorphic graphs as graph6 lines"};
    int n = 0;
    bool connected = false;
    app.add_option("n", n, "Number of vertices (0..7)")->required();
    app.add_flag("--connected", connected, "Connected graphs only");
    try {
        app.parse(argc, argv);
        for (const cendom::Graph& g : cendom::nonisomorphic_graphs(n, connected))
            std::cout << cendom::write_graph6(g) << "\n";
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
