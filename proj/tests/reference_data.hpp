#pragma once
// Frozen expected values for the test suites. Keys are exact rational
// 5-tuples (z1, z2_sq, w1, w2_z2, t_sq) given as strings.

#include <array>
#include <string>
#include <vector>

namespace refdata {

using RefKey = std::array<std::string, 5>;

inline const RefKey k_sommerville = {"1/2", "1/2", "1/2", "0", "1/2"};
inline const RefKey k_path = {"1/3", "2/9", "2/3", "1/9", "1/6"};
inline const RefKey k_regular = {"1/2", "3/4", "1/2", "1/4", "2/3"};
inline const RefKey k_cube_corner = {"1/2", "1/4", "1/2", "1/4", "1/2"};
inline const RefKey k_wedge = {"1/2", "1/4", "1/2", "1/4", "1/200"};
inline const RefKey k_needle = {"3/602", "3603/362404", "3/602", "1797/362404", "2700/361501"};
inline const RefKey k_perturbed_sommerville = {"190/401", "84200/160801", "190/401", "4000/160801", "88200/168821"};
inline const RefKey k_halves_variant_a = {"1/2", "221/800", "1/2", "1/4", "121/442"};
inline const RefKey k_sommerville_variant = {"100/221", "23150/48841", "100/221", "1050/48841", "48400/102323"};
inline const RefKey k_halves_variant_b = {"1/2", "1/4", "53/100", "49/200", "9/25"};

inline const RefKey k_T1 = {"5/11", "137/242", "21/44", "49/484", "12703/24112"};
inline const RefKey k_T2 = {"3/7", "85/147", "10/21", "31/294", "12071/21420"};
inline const RefKey k_T3 = {"10/21", "236/441", "1/2", "2/21", "2689/4956"};
inline const RefKey k_T4 = {"20/41", "1117/1681", "21/41", "318/1681", "29082/45797"};
inline const RefKey k_T5 = {"99/200", "28599/40000", "101/200", "9001/40000", "1870811/2859900"};
inline const RefKey k_T6 = {"99/200", "28199/40000", "101/200", "8801/40000", "1850713/2819900"};

inline const RefKey k_halves = {"1/2", "1/4", "1/2", "1/4", "1/4"};
inline const RefKey k_path_image = {"1/2", "1/8", "1/2", "0", "1/4"};

inline const std::array<std::string, 6> len_T1 = {"22", "17", "17", "19", "18", "20"};
inline const std::array<std::string, 6> len_T2 = {"21", "16", "17", "19", "18", "20"};
inline const std::array<std::string, 6> len_T3 = {"21", "17", "17", "17", "16", "19"};
inline const std::array<std::string, 6> len_T4 = {"41", "38", "38", "39", "37", "40"};
inline const std::array<std::string, 6> len_T5 = {"100", "97", "97", "98", "96", "99"};
inline const std::array<std::string, 6> len_T6 = {"100", "97", "96", "98", "95", "99"};

inline const std::vector<RefKey> chain_to_cube_corner = {
    {"1/4", "3/16", "1/2", "1/8", "2/3"},
    {"1/4", "3/16", "1/2", "1/4", "1/6"},
    {"1/2", "1/12", "1/3", "0", "2/9"},
    {"1/2", "1/8", "1/2", "1/8", "1/8"},
    {"1/4", "3/16", "1/2", "1/8", "1/6"},
    {"1/2", "1/4", "1/2", "0", "1/4"},
    {"1/2", "1/4", "1/2", "1/4", "1/2"}
};

inline const std::vector<RefKey> orbit8_keys = {
    {"1/2", "121/400", "1/2", "121/400", "1/4"},
    {"1/2", "1/4", "1/2", "1/4", "121/400"},
    {"1/2", "25/121", "1/2", "25/121", "25/121"},
    {"100/321", "22100/103041", "200/321", "12100/103041", "12100/70941"},
    {"100/321", "22100/103041", "221/321", "10000/103041", "12100/70941"},
    {"1/2", "121/800", "1/2", "0", "1/4"},
    {"1/2", "25/221", "100/221", "0", "12100/48841"},
    {"1/2", "25/221", "121/221", "0", "12100/48841"}
};

inline const std::vector<RefKey> orbit25_keys = {
    {"190/401", "84200/160801", "190/401", "4000/160801", "88200/168821"},
    {"1/2", "441/1600", "1/2", "21/80", "1/4"},
    {"1/2", "100/441", "10/21", "100/441", "100/441"},
    {"1/2", "401/1600", "1/2", "211/800", "441/1604"},
    {"1/2", "100/441", "11/21", "100/441", "100/441"},
    {"1/2", "100/401", "211/401", "100/401", "44100/160801"},
    {"190/401", "44100/160801", "190/401", "44100/160801", "100/401"},
    {"10/21", "100/441", "10/21", "100/441", "100/441"},
    {"1/2", "401/1600", "1/2", "19/80", "441/1604"},
    {"1/2", "100/401", "190/401", "100/401", "44100/160801"},
    {"1/2", "441/1600", "1/2", "231/800", "1/4"},
    {"1/3", "2/9", "13/20", "7/60", "147/800"},
    {"1/3", "2/9", "41/60", "19/180", "147/800"},
    {"19/60", "421/1800", "13/20", "77/600", "147/842"},
    {"100/321", "22100/103041", "431/642", "10550/103041", "3675/23647"},
    {"100/321", "22100/103041", "137/214", "3850/34347", "3675/23647"},
    {"211/642", "21050/103041", "137/214", "3500/34347", "7350/45047"},
    {"410/841", "84200/707281", "441/841", "-4200/707281", "88200/354061"},
    {"130/267", "9800/71289", "401/801", "-1400/213867", "200/801"},
    {"410/841", "84200/707281", "400/841", "4200/707281", "88200/354061"},
    {"1/2", "1/8", "19/40", "0", "441/1600"},
    {"1/2", "1/8", "21/40", "0", "441/1600"},
    {"130/267", "9800/71289", "400/801", "1400/213867", "200/801"},
    {"1/2", "25/221", "231/442", "0", "11025/48841"},
    {"1/2", "25/221", "211/442", "0", "11025/48841"}
};

inline const std::vector<RefKey> t1_orbit_keys = {
    {"21/76", "1079/5776", "13/19", "233/2888", "12703/82004"},
    {"53/108", "1079/11664", "61/108", "7/11664", "12703/58266"},
    {"43/88", "1759/7744", "5/11", "225/968", "12703/38698"},
    {"20/41", "297/1681", "39/82", "20/1681", "12703/48708"},
    {"55/116", "2543/13456", "27/58", "1299/6728", "12703/73747"},
    {"39/80", "1759/6400", "1/2", "41/160", "12703/35180"},
    {"5/17", "60/289", "12/17", "217/2312", "12703/65280"},
    {"12/25", "137/1250", "59/100", "-2/625", "12703/54800"},
    {"1/2", "5/48", "41/96", "1/192", "12703/46080"},
    {"5/17", "60/289", "10/17", "263/2312", "12703/65280"},
    {"39/80", "1759/6400", "19/40", "939/3200", "12703/35180"},
    {"47/96", "1055/9216", "13/32", "29/3072", "12703/50640"},
    {"39/80", "2319/6400", "1/2", "11/32", "12703/46380"},
    {"55/116", "2543/13456", "14/29", "311/1682", "12703/73747"},
    {"57/116", "2319/13456", "27/58", "1187/6728", "12703/67251"},
    {"1/2", "5/48", "55/96", "1/192", "12703/46080"},
    {"5/11", "137/242", "21/44", "49/484", "12703/24112"},
    {"1/2", "5/48", "41/96", "-1/192", "12703/46080"},
    {"23/72", "1055/5184", "7/12", "97/864", "12703/75960"},
    {"41/86", "1243/7396", "45/86", "-39/7396", "12703/53449"},
    {"5/17", "60/289", "41/68", "287/2312", "12703/65280"},
    {"6/19", "137/722", "45/76", "315/2888", "12703/83296"},
    {"47/96", "1055/9216", "19/32", "-29/3072", "12703/50640"},
    {"5/17", "137/578", "10/17", "331/2312", "12703/74528"},
    {"39/80", "2319/6400", "19/40", "1219/3200", "12703/46380"},
    {"41/86", "1243/7396", "41/86", "39/7396", "12703/53449"},
    {"12/25", "137/1250", "41/100", "2/625", "12703/54800"},
    {"53/108", "1079/11664", "47/108", "-7/11664", "12703/58266"},
    {"5/17", "60/289", "47/68", "193/2312", "12703/65280"},
    {"41/88", "2543/7744", "21/44", "1251/3872", "12703/55946"},
    {"57/116", "2319/13456", "15/29", "283/1682", "12703/67251"},
    {"43/88", "1759/7744", "23/44", "859/3872", "12703/38698"},
    {"20/41", "297/1681", "43/82", "-20/1681", "12703/48708"},
    {"19/72", "1079/5184", "49/72", "473/5184", "12703/77688"},
    {"41/88", "2543/7744", "5/11", "323/968", "12703/55946"},
    {"1/2", "5/48", "55/96", "-1/192", "12703/46080"},
    {"19/72", "1079/5184", "7/12", "101/864", "12703/77688"},
    {"21/76", "1079/5776", "45/76", "613/5776", "12703/82004"},
    {"21/68", "1055/4624", "41/68", "669/4624", "12703/71740"}
};

inline const std::vector<int> orbit8_cluster_h = {0, 1, 2};
inline const std::vector<int> orbit8_cluster_p = {3, 4};
inline const std::vector<int> orbit8_cluster_q = {5, 6, 7};
inline const std::vector<int> orbit25_cluster_h = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
inline const std::vector<int> orbit25_cluster_p = {11, 12, 13, 14, 15, 16};
inline const std::vector<int> orbit25_cluster_q = {17, 18, 19, 20, 21, 22, 23, 24};

} // namespace refdata