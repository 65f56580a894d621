#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cremona/enumeration.hpp"

namespace cremona::testing {

// Proper types of degree <= 11 other than the two infinite families.
inline const std::map<Int, std::vector<std::string>>& golden_rows() {
    static const std::map<Int, std::vector<std::string>> rows{
        {5, {"5;2^6"}},
        {6, {"6;3^3,2,1^4", "6;3^2,2^4,1"}},
        {7, {"7;4,3^3,1^5", "7;4,3^2,2^3,1^2", "7;3^4,2^3"}},
        {8, {"8;5,3^3,2^2,1^3", "8;5,3^2,2^5", "8;4^3,3,1^6", "8;4^3,2^3,1^3", "8;4^2,3^2,2^3,1", "8;4,3^5,1^2",
             "8;3^7"}},
        {9, {"9;6,3^4,2,1^4", "9;6,3^3,2^4,1", "9;5,4^3,1^7", "9;5,4^2,3,2^3,1^2", "9;5,4,3^4,1^3", "9;5,4,3^3,2^3",
             "9;4^4,2^4", "9;4^3,3^3,2,1"}},
        {10, {"10;7,3^5,1^5", "10;7,3^4,2^3,1^2", "10;6,4^3,2^3,1^3", "10;6,4^2,3^3,1^4", "10;6,4^2,3^2,2^3,1",
              "10;6,3^7", "10;5^3,4,1^8", "10;5^3,3,2^3,1^3", "10;5^3,2^6", "10;5^2,4^2,2^4,1", "10;5^2,4,3^3,2,1^2",
              "10;5^2,3^5,2", "10;5,4^3,3^2,2^2", "10;4^6,1^3", "10;4^5,3^2,1"}},
        {11, {"11;8,3^5,2^2,1^3", "11;8,3^4,2^5", "11;7,4^3,3^2,1^5", "11;7,4^3,3,2^3,1^2", "11;7,4^2,3^3,2^3",
              "11;7,4,3^6,1", "11;6,5^3,1^9", "11;6,5^2,4,2^4,1^2", "11;6,5^2,3^3,2,1^3", "11;6,5^2,3^2,2^4",
              "11;6,5,4^2,3^2,2^2,1", "11;6,4^5,1^4", "11;6,4^3,3^4", "11;5^4,2^5", "11;5^3,4,3^3,1^2",
              "11;5^2,4^4,2,1^2", "11;5^2,4^3,3^2,2"}},
    };
    return rows;
}

inline std::set<HomaloidalType> golden_set(Int d) {
    std::set<HomaloidalType> s;
    if (d >= 2) s.insert(family_de_jonquieres(d));
    if (d >= 4) s.insert(family_sub2(d));
    if (auto it = golden_rows().find(d); it != golden_rows().end())
        for (const auto& r : it->second) s.insert(parse_homaloidal_type(r));
    return s;
}

}  // namespace cremona::testing
