#pragma once

namespace persymm {

// Closed-form family tables, version 1.
//
// Format, one record per line ('#' starts a comment):
//   family <id> blocks=<P<rows>[+l]|F<rows>,...> [lmin=N] [builtin=<name>]
//   piece  <id> | [l-window] | i=<lin>[..<lin>] | k><lin> or k>=<lin> | <terms>
//   table  <id> | k=N [l=N] | <counts...>
//   toprank <id> | i=N | <terms>     (printed boundary entries at k=i)
//   note   <id> | <annotation>       (typo ledger)
// <lin> is linear in k, l, i; <terms> is a sum of c*2^(<lin>) and constants.
//
// Where a printed constant conflicted with the enumeration oracle or with
// the reduction/checksum identities, the arbitrated value is stored here
// and the printed one is kept in a note line.
inline constexpr const char* kFamiliesText = R"REG(
# ---- single persymmetric [s]xk (derived closed form, oracle-verified; s,k <= 64)
family single builtin=single

# ---- n-fold stack of single rows [1;...;1]x1 (n via the k argument)
family nfold1 builtin=nfold
note nfold1 | printed rank label "i = 2" for the second entry read as rank 1 (an n x 1 matrix has rank at most 1)

# ---- [2;2]xk
family double22 blocks=P2,P2
piece double22 | i=0 | k>=1 | 1
piece double22 | i=1 | k>1  | 9
piece double22 | i=2 | k>2  | 3*2^(k+1) + 30
piece double22 | i=3 | k>3  | 21*2^(k+1) - 168
piece double22 | i=4 | k>=4 | 2^(2k+2) - 3*2^(k+4) + 128
note double22 | compact solution count at q=2, k>=4 printed as 2^(2k+8)+27*2^(k+1)+192; the general prefactor line and direct tuple enumeration both give 2^(2k)+27*2^(k+1)+192 (e.g. 1312 at k=4), so the 2^(2k) reading is stored
toprank double22 | i=1 | 15
toprank double22 | i=2 | 54
toprank double22 | i=3 | 168
toprank double22 | i=4 | 384

# ---- [5;5]xk
family double55 blocks=P5,P5
piece double55 | i=0  | k>=1  | 1
piece double55 | i=1  | k>1   | 9
piece double55 | i=2  | k>2   | 78
piece double55 | i=3  | k>3   | 648
piece double55 | i=4  | k>4   | 5280
piece double55 | i=5  | k>5   | 3*2^(k+4) + 39552
piece double55 | i=6  | k>6   | 21*2^(k+4) + 290304
piece double55 | i=7  | k>7   | 21*2^(k+7) + 1892352
piece double55 | i=8  | k>8   | 21*2^(k+10) + 8257536
piece double55 | i=9  | k>9   | 21*2^(k+13) - 44040192
piece double55 | i=10 | k>=10 | 2^(2k+8) - 3*2^(k+16) + 2^(25)
note double55 | i=8 constant printed as "825753 6", read as 8257536 (checksum- and oracle-confirmed)
toprank double55 | i=1  | 2^(10) - 1
toprank double55 | i=2  | 2^(12) - 10
toprank double55 | i=3  | 2^(14) - 88
toprank double55 | i=4  | 2^(16) - 736
toprank double55 | i=5  | 2^(18) - 6016
toprank double55 | i=6  | 2^(20) - 48640
toprank double55 | i=7  | 2^(22) - 385024
toprank double55 | i=8  | 2^(24) - 3014656
toprank double55 | i=9  | 2^(26) - 23068672
toprank double55 | i=10 | 2^(28) - 167772160
table double55 | k=4 | 1 9 78 648 64800

# ---- fixed-k tables
family double-2-23x4 blocks=P2,P5
table double-2-23x4 | k=4 | 1 9 94 600 7488

family double-2-23-f1x4 blocks=P2,P5,F1
table double-2-23-f1x4 | k=4 | 1 33 502 5928 124608

family double-2-f2x4 blocks=P2,F2
table double-2-f2x4 | k=4 | 1 57 910 4536 2688

family double-22-f4x4 blocks=P2,P2,F4
table double-22-f4x4 | k=4 | 1 369 54726 3765384 63288384

family triple222x6 blocks=P2,P2,P2
table triple222x6 | k=6 | 1 21 1162 20160 258720 1128960 688128

family triple222x2 blocks=P2,P2,P2
table triple222x2 | k=2 | 1 21 490

family triple-222-f3x4 blocks=P2,P2,P2,F3
table triple-222-f3x4 | k=4 | 1 273 41062 3807048 130369344

# ---- [2;2;2]xk, general k (derived closed form, oracle-verified for k <= 8)
family triple222 blocks=P2,P2,P2
piece triple222 | i=0 | k>=1 | 1
piece triple222 | i=1 | k>1  | 21
piece triple222 | i=2 | k>2  | 7*2^(k+1) + 266
piece triple222 | i=3 | k>3  | 147*2^(k+1) + 1344
piece triple222 | i=4 | k>4  | 7*2^(2k+2) + 651*2^(k+2) - 22624
piece triple222 | i=5 | k>5  | 105*2^(2k+2) - 315*2^(k+5) + 53760
piece triple222 | i=6 | k>=6 | 2^(3k+3) - 7*2^(2k+6) + 7*2^(k+10) - 2^(15)

# ---- [1;1;1]xk, general k (derived: three unconstrained rows)
family triple111 blocks=P1,P1,P1
piece triple111 | i=0 | k>=1 | 1
piece triple111 | i=1 | k>1  | 7*2^(k) - 7
piece triple111 | i=2 | k>2  | 7*2^(2k) - 21*2^(k) + 14
piece triple111 | i=3 | k>=3 | 2^(3k) - 7*2^(2k) + 14*2^(k) - 8

# ---- [3;3;3+l]xk
family triple-s3 blocks=P3,P3,P3+l lmin=0
piece triple-s3 | i=0 | k>=1 | 1
piece triple-s3 | i=1 | k>1  | 21
piece triple-s3 | i=2 | k>2  | 378
# l = 0
piece triple-s3 | l=0 | i=3 | k>3  | 7*2^(k+2) + 5936
piece triple-s3 | l=0 | i=4 | k>4  | 147*2^(k+2) + 84672
piece triple-s3 | l=0 | i=5 | k>5  | 1323*2^(k+3) + 959616
piece triple-s3 | l=0 | i=6 | k>6  | 7*2^(2k+4) + 2121*2^(k+6) + 5863424
piece triple-s3 | l=0 | i=7 | k>7  | 105*2^(2k+4) + 2625*2^(k+9) - 92897280
piece triple-s3 | l=0 | i=8 | k>8  | 105*2^(2k+8) - 315*2^(k+14) + 220200960
piece triple-s3 | l=0 | i=9 | k>=9 | 2^(3k+6) - 7*2^(2k+12) + 7*2^(k+19) - 134217728
# l = 1
piece triple-s3 | l=1 | i=3  | k>3   | 3*2^(k+2) + 6192
piece triple-s3 | l=1 | i=4  | k>4   | 71*2^(k+2) + 95168
piece triple-s3 | l=1 | i=5  | k>5   | 651*2^(k+3) + 1335936
piece triple-s3 | l=1 | i=6  | k>6   | 2^(2k+4) + 645*2^(k+7) + 15405056
note triple-s3 | l=1 constants printed as 124864 (i=4), 1246848 (i=5), 15464448 (i=6); enumeration at k=5..8 gives 95168, 1335936, 15405056. The printed triple deviates by (+1,-3,+2)*29696, which cancels in both the column total and the q=1 solution count, so only enumeration detects it
piece triple-s3 | l=1 | i=7  | k>7   | 27*2^(2k+4) + 531*2^(k+11) + 93782016
piece triple-s3 | l=1 | i=8  | k>8   | 105*2^(2k+6) + 2625*2^(k+12) - 1486356480
piece triple-s3 | l=1 | i=9  | k>9   | 105*2^(2k+10) - 315*2^(k+17) + 3523215360
piece triple-s3 | l=1 | i=10 | k>=10 | 2^(3k+7) - 7*2^(2k+14) + 7*2^(k+22) - 2147483648
# l = 2
piece triple-s3 | l=2 | i=3  | k>3   | 3*2^(k+2) + 6192
piece triple-s3 | l=2 | i=4  | k>4   | 39*2^(k+2) + 99264
piece triple-s3 | l=2 | i=5  | k>5   | 347*2^(k+3) + 1503872
piece triple-s3 | l=2 | i=6  | k>6   | 2^(2k+4) + 618*2^(k+6) + 21426176
piece triple-s3 | l=2 | i=7  | k>7   | 3*2^(2k+4) + 1293*2^(k+9) + 246448128
piece triple-s3 | l=2 | i=8  | k>8   | 27*2^(2k+6) + 531*2^(k+14) + 1500512256
piece triple-s3 | l=2 | i=9  | k>9   | 105*2^(2k+8) + 2625*2^(k+15) - 92897280*2^(8)
piece triple-s3 | l=2 | i=10 | k>10  | 105*2^(2k+12) - 315*2^(k+20) + 53760*2^(20)
piece triple-s3 | l=2 | i=11 | k>=11 | 2^(3k+8) - 7*2^(2k+16) + 7*2^(k+25) - 2^(35)
# l = 3
piece triple-s3 | l=3 | i=3  | k>3   | 3*2^(k+2) + 6192
piece triple-s3 | l=3 | i=4  | k>4   | 39*2^(k+2) + 99264
piece triple-s3 | l=3 | i=5  | k>5   | 219*2^(k+3) + 1569408
piece triple-s3 | l=3 | i=6  | k>6   | 2^(2k+4) + 314*2^(k+6) + 24113152
piece triple-s3 | l=3 | i=7  | k>7   | 3*2^(2k+4) + 621*2^(k+9) + 342786048
piece triple-s3 | l=3 | i=8  | k>8   | 3*2^(2k+6) + 1293*2^(k+12) + 3943170048
piece triple-s3 | l=3 | i=9  | k>9   | 27*2^(2k+8) + 531*2^(k+17) + 93782016*2^(8)
piece triple-s3 | l=3 | i=10 | k>10  | 105*2^(2k+10) + 2625*2^(k+18) - 92897280*2^(12)
piece triple-s3 | l=3 | i=11 | k>11  | 105*2^(2k+14) - 315*2^(k+23) + 53760*2^(24)
piece triple-s3 | l=3 | i=12 | k>=12 | 2^(3k+9) - 7*2^(2k+18) + 7*2^(k+28) - 2^(39)
# l = 4
piece triple-s3 | l=4 | i=3  | k>3   | 3*2^(k+2) + 6192
piece triple-s3 | l=4 | i=4  | k>4   | 39*2^(k+2) + 99264
piece triple-s3 | l=4 | i=5  | k>5   | 219*2^(k+3) + 1569408
piece triple-s3 | l=4 | i=6  | k>6   | 2^(2k+4) + 186*2^(k+6) + 25161728
piece triple-s3 | l=4 | i=7  | k>7   | 3*2^(2k+4) + 317*2^(k+9) + 385777664
piece triple-s3 | l=4 | i=8  | k>8   | 3*2^(2k+6) + 621*2^(k+12) + 5356032*2^(10)
piece triple-s3 | l=4 | i=9  | k>9   | 3*2^(2k+8) + 1293*2^(k+15) + 240672*2^(18)
piece triple-s3 | l=4 | i=10 | k>10  | 27*2^(2k+10) + 531*2^(k+20) + 93782016*2^(12)
piece triple-s3 | l=4 | i=11 | k>11  | 105*2^(2k+12) + 2625*2^(k+21) - 92897280*2^(16)
piece triple-s3 | l=4 | i=12 | k>12  | 105*2^(2k+16) - 315*2^(k+26) + 53760*2^(28)
piece triple-s3 | l=4 | i=13 | k>=13 | 2^(3k+10) - 7*2^(2k+20) + 7*2^(k+31) - 2^(43)
note triple-s3 | l=4 i=7 constant printed as 38577664, read as 385777664: the l=5 table's i=8 entry equals 16*Gamma_7(l=4,k-1) and forces the extra digit, as does the l=4 checksum (gap 347200000)
# l >= 5
piece triple-s3 | l>=5 | i=3       | k>3  | 3*2^(k+2) + 6192
piece triple-s3 | l>=5 | i=4       | k>4  | 39*2^(k+2) + 99264
piece triple-s3 | l>=5 | i=5       | k>5  | 219*2^(k+3) + 1569408
piece triple-s3 | l>=5 | i=6       | k>6  | 2^(2k+4) + 186*2^(k+6) + 25161728
piece triple-s3 | l>=5 | i=7..l+2  | k>i  | 3*2^(2k+2i-10) + 189*2^(k+3i-12) + 402554880*2^(4i-28)
piece triple-s3 | l>=5 | i=l+3     | k>i  | 3*2^(2k+2l-4) + 317*2^(k+3l-3) + 385777664*2^(4l-16)
piece triple-s3 | l>=5 | i=l+4     | k>i  | 3*2^(2k+2l-2) + 621*2^(k+3l) + 342786048*2^(4l-12)
piece triple-s3 | l>=5 | i=l+5     | k>i  | 3*2^(2k+2l) + 1293*2^(k+3l+3) + 246448128*2^(4l-8)
piece triple-s3 | l>=5 | i=l+6     | k>i  | 27*2^(2k+2l+2) + 531*2^(k+3l+8) + 93782016*2^(4l-4)
piece triple-s3 | l>=5 | i=l+7     | k>i  | 105*2^(2k+2l+4) + 2625*2^(k+3l+9) - 92897280*2^(4l)
piece triple-s3 | l>=5 | i=l+8     | k>i  | 105*2^(2k+2l+8) - 315*2^(k+3l+14) + 53760*2^(4l+12)
piece triple-s3 | l>=5 | i=l+9     | k>=i | 2^(3k+l+6) - 7*2^(2k+2l+12) + 7*2^(k+3l+19) - 2^(4l+27)
note triple-s3 | general-l table's i=l+3 constant printed as 38577664*2^(4l-16); same digit drop as the l=4 table, stored as 385777664*2^(4l-16)

# ---- [2;2+3;2+3+l]xk, l >= 4
family triple-2-3-l blocks=P2,P5,P5+l lmin=4
piece triple-2-3-l | i=0 | k>=1 | 1
piece triple-2-3-l | i=1 | k>1  | 21
piece triple-2-3-l | i=2 | k>2  | 2^(k+1) + 362
piece triple-2-3-l | i=3 | k>3  | 9*2^(k+1) + 6048
piece triple-2-3-l | i=4 | k>4  | 39*2^(k+2) + 98784
piece triple-2-3-l | i=5 | k>5  | 97*2^(k+4) + 1580288
piece triple-2-3-l | i=6 | k>6  | 225*2^(k+6) + 25135104
piece triple-2-3-l | i=7 | k>7  | 2^(2k+5) + 417*2^(k+8) + 402571264
piece triple-2-3-l | i=8..l+4 | k>i  | 3*2^(2k+2i-11) + 105*2^(k+3i-11) + 12285*2^(4i-13)
piece triple-2-3-l | i=l+5    | k>i  | 3*2^(2k+2l-1) + 137*2^(k+3l+4) + 12029*2^(4l+7)
piece triple-2-3-l | i=l+6    | k>i  | 3*2^(2k+2l+1) + 213*2^(k+3l+7) + 11373*2^(4l+11)
piece triple-2-3-l | i=l+7    | k>i  | 11*2^(2k+2l+3) + 333*2^(k+3l+10) + 10159*2^(4l+15)
note triple-2-3-l | i=l+7 middle term printed as 333*2^(k+3l+9); the column total then falls short of 2^(3k+l+9) by exactly that amount, and the reduction identity Gamma_{l+7}(k=l+8) = 16^(l-1)*Gamma_8 of [2;5;6]x9 enumerates to 12999*2^(4l+15), not 11667*2^(4l+15), forcing 333*2^(k+3l+10)
piece triple-2-3-l | i=l+8    | k>i  | 21*2^(2k+2l+5) + 2331*2^(k+3l+11) + 15435*2^(4l+18)
piece triple-2-3-l | i=l+9    | k>i  | 21*2^(2k+2l+8) + 2163*2^(k+3l+15) + 2835*2^(4l+23)
piece triple-2-3-l | i=l+10   | k>i  | 53*2^(2k+2l+11) + 1311*2^(k+3l+19) - 1417*2^(4l+28)
piece triple-2-3-l | i=l+11   | k>i  | 105*2^(2k+2l+14) - 315*2^(k+3l+23) + 105*2^(4l+33)
piece triple-2-3-l | i=l+12   | k>=i | 2^(3k+l+9) - 7*2^(2k+2l+18) + 7*2^(k+3l+28) - 2^(4l+39)
table triple-2-3-l | k=6 l=4 | 1 21 490 7200 108768 1679616 2145687552
)REG";

}  // namespace persymm
