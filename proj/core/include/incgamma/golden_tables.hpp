#ifndef INCGAMMA_GOLDEN_TABLES_HPP
#define INCGAMMA_GOLDEN_TABLES_HPP

#include <string_view>

#include "incgamma/rational_poly.hpp"

namespace incgamma::golden {

// Reference copies of the first coefficient families, kept as exact-fraction
// text.  One nonzero coefficient per line: "<family> <n> <k> <num/den>".
// C_n is tabulated for n <= 8, d_n for n <= 10.
inline constexpr std::string_view kTableText = R"(
C 0 2 1/3
C 0 0 -1/3
C 1 5 1/18
C 1 3 -11/36
C 1 1 1/12
C 2 8 1/162
C 2 6 -29/324
C 2 4 133/540
C 2 2 -23/540
C 2 0 -1/540
C 3 11 1/1944
C 3 9 -7/486
C 3 7 463/4320
C 3 5 -883/4320
C 3 3 23/864
C 3 1 -1/288
C 4 14 1/29160
C 4 12 -23/14580
C 4 10 881/38880
C 4 8 -1507/12960
C 4 6 7901/45360
C 4 4 -61/3024
C 4 2 23/6048
C 4 0 25/6048
C 5 17 1/524880
C 5 15 -137/1049760
C 5 13 2149/699840
C 5 11 -42331/1399680
C 5 9 5910101/48988800
C 5 7 -413177/2721600
C 5 5 3239/194400
C 5 3 -319/155520
C 5 1 -139/51840
C 6 20 1/11022480
C 6 18 -191/22044960
C 6 16 1483/4898880
C 6 14 -47639/9797760
C 6 12 1810717/48988800
C 6 10 -1996859/16329600
C 6 8 146611/1088640
C 6 6 -2203/155520
C 6 4 11/10368
C 6 2 259/155520
C 6 0 101/155520
C 7 23 1/264539520
C 7 21 -127/264539520
C 7 19 2939/125971200
C 7 17 -2911/5248800
C 7 15 3217793/470292480
C 7 13 -33561391/783820800
C 7 11 13697119/111974400
C 7 9 -3797293/31352832
C 7 7 213841/17418240
C 7 5 -4069/7464960
C 7 3 -6101/7464960
C 7 1 571/2488320
C 8 26 1/7142567040
C 8 24 -163/7142567040
C 8 22 35047/23808556800
C 8 20 -41279/850305600
C 8 18 168240799/190468454400
C 8 16 -26988481/3023308800
C 8 14 1266722761/26453952000
C 8 12 -3211451701/26453952000
C 8 10 21361155917/193995648000
C 8 8 -419199161/38799129600
C 8 6 889093/2771366400
C 8 4 510887/923788800
C 8 2 -2016373/3695155200
C 8 0 -3184811/3695155200
d 0 2 1/3
d 0 0 -1/3
d 1 3 1/36
d 1 1 -7/36
d 2 4 -1/270
d 2 2 -7/810
d 2 0 8/405
d 3 5 1/4320
d 3 3 8/1215
d 3 1 -433/38880
d 4 6 1/17010
d 4 4 -1/840
d 4 2 -923/204120
d 4 0 184/25515
d 5 7 -139/5443200
d 5 5 -1451/48988800
d 5 3 289517/146966400
d 5 1 289717/146966400
d 6 8 1/204120
d 6 6 769/9185400
d 6 4 -151/874800
d 6 2 -104989/55112400
d 6 0 2248/3444525
d 7 9 -571/2351462400
d 7 7 -1087/41990400
d 7 5 -30469/235146240
d 7 3 219257/661348800
d 7 1 1500053/846526464
d 8 10 -281/1515591000
d 8 8 49271/15588936000
d 8 6 997903/15588936000
d 8 4 101251277/654735312000
d 8 2 -96026707/280600848000
d 8 0 -19006408/15345358875
d 9 11 163879/2172751257600
d 9 9 209488529/293321419776000
d 9 7 -252836779/20951529984000
d 9 5 -15974596457/146660709888000
d 9 3 -556030221167/2639892777984000
d 9 1 487855454729/2639892777984000
d 10 12 -5221/354648294000
d 10 10 -1316963/2708223336000
d 10 8 -329677/255346771680
d 10 6 1386098437/53622822052800
d 10 4 11414859619/71497096070400
d 10 2 1069525622411/3217369323168000
d 10 0 -5667959576/12567848918625
)";

inline constexpr int kGoldenCMax = 8;
inline constexpr int kGoldenDMax = 10;

// Rebuilds the tabulated polynomial for family 'C' or 'd'.
RationalPoly poly(char family, int n);

} // namespace incgamma::golden

#endif
