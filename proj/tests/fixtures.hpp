#pragma once

#include <string>
#include <vector>

#include <plab/collection.hpp>

namespace fixtures {

// Top cell of Gr(4, 9) and a 21-set maximal collection over it with twelve interior sets.
inline plab::GrassmannNecklace top_gr49()
{
    return plab::necklace_from_permutation(plab::parse_permutation("567891234"));
}

inline std::vector<plab::KSet> top_gr49_interior()
{
    std::vector<plab::KSet> out;
    for (auto s : {"5679", "1567", "1679", "1689", "1269", "1249", "1246", "1346", "1345", "3467", "1267", "1467"})
        out.push_back(plab::parse_kset(9, s));
    return out;
}

inline plab::WSCollection top_gr49_collection()
{
    auto I = std::make_shared<const plab::GrassmannNecklace>(top_gr49());
    auto sets = top_gr49_interior();
    sets.insert(sets.end(), I->sets().begin(), I->sets().end());
    return plab::WSCollection(I, sets);
}

inline plab::WSCollection gr24_collection()
{
    auto I = std::make_shared<const plab::GrassmannNecklace>(plab::necklace_from_permutation(plab::parse_permutation("3412")));
    auto sets = I->sets();
    sets.push_back(plab::KSet(4, {1, 3}));
    return plab::WSCollection(I, sets);
}

} // namespace fixtures
