#include "oracle.hpp"

namespace oracle {

std::vector<NamedSpace> corpus() {
    using namespace cspace;
    std::vector<NamedSpace> out;
    for (unsigned n = 1; n <= 5; ++n)
        out.push_back({"L" + std::to_string(n), build_literal(n)});
    out.push_back({"B1", build_full_boolean(1)});
    out.push_back({"B2", build_full_boolean(2)});
    out.push_back({"F-lits2", build_from_formulas(parse_formula_list(
                                 "a\n!a\nb\n!b\n"))});
    out.push_back({"F-chain", build_from_formulas(parse_formula_list(
                                 "p\np -> q\nq -> r\n!r\n"))});
    for (std::uint64_t seed : {7, 11, 23})
        out.push_back({"R" + std::to_string(seed),
                       random_space(4 + static_cast<unsigned>(seed % 3),
                                    4 + static_cast<unsigned>(seed % 3), seed)});
    return out;
}

}  // namespace oracle
