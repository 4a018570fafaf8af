#pragma once

#include <string>
#include <vector>

// Reference 80-shuffle table for pi = rho = 12463578, fully barred
// (rows in reference order, blank cells empty).
inline const std::vector<std::string> kReferenceTableRows = {
    "23561478,1,1,2,1,2,1,1,,,,,",
    "14562378,,1,,1,1,1,,1,,,,",
    "13572468,,,1,2,2,3,3,2,2,1,,",
    "13572468,,,1,2,2,3,3,2,2,1,,",
    "23471568,,1,1,2,2,2,1,1,,,,",
    "13482567,,,,,1,1,2,2,2,1,1,",
    "12673458,,,,,1,,1,1,1,,1,",
    "12583467,,,,,,1,1,2,1,2,1,1",
};
inline const std::string kReferenceTableHeader = "q-statistic,26,27,28,29,30,31,32,33,34,35,36,37";
inline const std::string kReferenceTableTotals = "total,1,3,5,8,11,12,12,11,8,5,3,1";
