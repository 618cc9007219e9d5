#include <sstream>

#include "circsym/symparams.hpp"

namespace circsym {

// One (s, -1) preserver per representative set of Z_j in Z_{2j}, j = 2..5.
// Kept in sync with tests/data/table3.tsv byte for byte via table3_render().
const std::vector<Table3Row>& table3_rows() {
    static const std::vector<Table3Row> rows = {
        {2, 1, {0, 1}},
        {2, 1, {2, 3}},
        {2, 3, {2, 1}},
        {2, 3, {0, 3}},

        {3, 0, {0, 1, 5}},
        {3, 0, {3, 4, 2}},
        {3, 2, {0, 1, 2}},
        {3, 2, {3, 1, 5}},
        {3, 2, {3, 4, 5}},
        {3, 4, {3, 1, 2}},
        {3, 4, {0, 4, 2}},
        {3, 4, {0, 4, 5}},

        {4, 1, {0, 1, 6, 3}},
        {4, 1, {0, 1, 2, 7}},
        {4, 1, {4, 5, 6, 3}},
        {4, 1, {4, 5, 2, 7}},
        {4, 3, {0, 1, 2, 3}},
        {4, 3, {4, 1, 2, 7}},
        {4, 3, {0, 5, 6, 3}},
        {4, 3, {4, 5, 6, 7}},
        {4, 5, {4, 1, 2, 3}},
        {4, 5, {0, 5, 2, 3}},
        {4, 5, {4, 1, 6, 7}},
        {4, 5, {0, 5, 6, 7}},
        {4, 7, {4, 5, 2, 3}},
        {4, 7, {4, 1, 6, 3}},
        {4, 7, {0, 5, 2, 7}},
        {4, 7, {0, 1, 6, 7}},

        {5, 0, {0, 6, 7, 3, 4}},
        {5, 0, {0, 6, 2, 8, 4}},
        {5, 0, {0, 1, 7, 3, 9}},
        {5, 0, {0, 1, 2, 8, 9}},
        {5, 0, {5, 6, 7, 3, 4}},
        {5, 0, {5, 6, 2, 8, 4}},
        {5, 0, {5, 1, 2, 8, 9}},
        {5, 2, {0, 1, 2, 8, 4}},
        {5, 2, {0, 1, 2, 3, 9}},
        {5, 2, {0, 6, 2, 3, 9}},
        {5, 2, {5, 1, 7, 8, 4}},
        {5, 2, {5, 1, 7, 3, 9}},
        {5, 2, {5, 6, 7, 8, 4}},
        {5, 2, {5, 6, 7, 3, 9}},
        {5, 4, {0, 1, 2, 3, 4}},
        {5, 4, {0, 1, 7, 3, 4}},
        {5, 4, {5, 1, 2, 3, 9}},
        {5, 4, {0, 6, 7, 8, 4}},
        {5, 4, {5, 6, 2, 8, 9}},
        {5, 4, {5, 6, 7, 8, 9}},
        {5, 6, {5, 1, 2, 3, 4}},
        {5, 6, {0, 6, 2, 3, 4}},
        {5, 6, {5, 1, 2, 8, 4}},
        {5, 6, {0, 6, 7, 3, 9}},
        {5, 6, {5, 1, 7, 8, 9}},
        {5, 6, {0, 6, 7, 8, 9}},
        {5, 8, {5, 6, 2, 3, 4}},
        {5, 8, {5, 1, 7, 3, 4}},
        {5, 8, {0, 1, 7, 8, 4}},
        {5, 8, {5, 6, 2, 3, 9}},
        {5, 8, {0, 6, 2, 8, 9}},
        {5, 8, {0, 1, 7, 8, 9}},
    };
    return rows;
}

std::string table3_render() {
    std::ostringstream os;
    os << "# (s,-1) preservers of representative sets of Z_j in Z_2j\n";
    os << "# j\ts\trepresentative set (class order)\n";
    for (const auto& row : table3_rows()) {
        os << row.j << '\t' << row.s << '\t';
        for (std::size_t k = 0; k < row.rep.size(); ++k) {
            if (k) os << ',';
            os << row.rep[k];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace circsym
