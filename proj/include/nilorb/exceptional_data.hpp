#pragma once

// Embedded copy of data/exceptional_orbits.dat; the shipped file and this
// constant are byte-identical (enforced by a test).

namespace nilorb::detail {

inline constexpr char kExceptionalTableText[] = R"NILORBDATA(# Self-dual K-orbit tables for the exceptional symmetric pairs.
# schema-version: 1
#
# Header lines:
#   form <label> <dim_k> <dim_p>
# declare a symmetric pair (g, k): complex dimensions of k and p.
#
# Row lines:
#   row <label>|<row_no>|<dyn_k>|<dyn_g>|<dim_k_orbit>|<count>|<levi>|<radu_dim>
# where
#   dyn_k  - weights of the characteristic on the beta-basis of k-roots,
#            comma-separated integers (may be negative when k has a center)
#   dyn_g  - weights on the alpha-basis of g-roots, comma-separated integers
#   dim    - complex dimension of the K-orbit
#   count  - number of K-orbits inside (G-orbit intersect p)
#   levi   - reductive Levi factor of the K-centralizer, tokens like
#            "A_1+T_1", "2A_2", "0" for the zero algebra; T_m is the Lie
#            algebra of an m-dimensional torus
#   radu   - dimension of the unipotent radical of the K-centralizer
# Every row satisfies dim + dim(levi) + radu = dim_k.
#
# Basis conventions for dyn_k (beta-side): the basis is a simple-root base of
# the k-root system, with two deviations.  For the pairs whose k is
# sp_4 (E6(6) split form) and F4(-52) (E6(-26)) the beta-basis has four
# nodes.  When k is not semisimple (E6(2)-type subpairs E6(-14), E7(-25))
# the last beta value is the weight on the extra torus direction
# (beta_l := alpha_l), so dyn_k entries can be negative there.

form G2(2) 6 8
row G2(2)|1|2,2|0,2|5|2|0|1
row G2(2)|2|0,4|0,2|5|2|0|1
row G2(2)|3|4,8|2,2|6|1|0|0

form F4(4) 24 28
row F4(4)|1|0,0,0,4|2,0,0,0|15|3|A_2|1
row F4(4)|2|0,0,4,0|0,2,0,0|20|3|0|4
row F4(4)|3|0,2,0,4|0,2,0,0|20|3|0|4
row F4(4)|4|2,0,2,2|0,2,0,0|20|3|0|4
row F4(4)|5|2,2,0,0|0,0,4,8|21|2|A_1|0
row F4(4)|6|0,4,0,4|0,2,0,2|22|2|0|2
row F4(4)|7|2,2,2,2|0,2,0,2|22|2|0|2
row F4(4)|8|2,2,4,4|2,2,0,2|23|2|0|1
row F4(4)|9|4,0,4,8|2,2,0,2|23|2|0|1
row F4(4)|10|4,4,4,8|2,2,2,2|24|1|0|0

form F4(-20) 36 16
row F4(-20)|1|0,0,0,1|0,0,0,1|11|1|A_3|10
row F4(-20)|2|4,0,0,0|0,0,0,2|15|1|G_2|7

form E6(6) 36 42
row E6(6)|1|2,2,2,2|2,0,2,2,2,2|35|1|0|1
row E6(6)|2|2,2,0,2|2,2,0,0,0,2|33|2|0|3
row E6(6)|3|0,2,2,0|2,2,0,0,0,2|33|2|0|3
row E6(6)|4|4,2,2,4|2,2,2,2,2,2|36|1|0|0

form E6(2) 38 40
row E6(2)|1|0,0,0,0,0,4|0,2,0,0,0,0|21|3|2A_2|1
row E6(2)|2|3,0,1,0,0,0|0,0,1,0,1,0|25|3|A_1+T_1|9
row E6(2)|3|0,0,1,0,3,0|0,0,1,0,1,0|25|3|A_1+T_1|9
row E6(2)|4|0,0,4,0,0,0|0,0,0,2,0,0|29|3|T_2|7
row E6(2)|5|0,2,0,2,0,4|0,0,0,2,0,0|29|3|T_2|7
row E6(2)|6|0,0,4,0,0,8|0,2,0,2,0,0|30|2|A_2|0
row E6(2)|7|4,0,0,0,4,4|2,2,0,0,0,2|30|2|A_1+T_1|4
row E6(2)|8|1,2,1,1,3,1|1,1,1,0,1,1|31|2|T_1|6
row E6(2)|9|3,1,1,2,1,1|1,1,1,0,1,1|31|2|T_1|6
row E6(2)|10|3,1,3,1,0,4|1,2,1,0,1,1|32|2|T_1|5
row E6(2)|11|0,1,3,1,3,4|1,2,1,0,1,1|32|2|T_1|5
row E6(2)|12|2,2,2,2,2,2|2,0,0,2,0,2|33|2|0|5
row E6(2)|13|0,4,0,4,0,4|2,0,0,2,0,2|33|2|0|5
row E6(2)|14|2,2,4,2,2,4|2,2,0,2,0,2|34|2|T_1|3
row E6(2)|15|4,0,4,0,4,8|2,2,0,2,0,2|34|2|T_1|3
row E6(2)|16|4,4,0,4,4,4|2,2,2,0,2,2|35|1|0|3
row E6(2)|17|4,4,4,4,4,8|2,2,2,2,2,2|36|1|0|2

form E6(-14) 46 32
row E6(-14)|1|1,0,0,0,0,1|1,0,0,0,0,1|16|3|B_3+T_1|8
row E6(-14)|2|1,0,0,0,0,-2|1,0,0,0,0,1|16|3|B_3+T_1|8
row E6(-14)|3|1,0,1,0,1,-2|1,1,0,0,0,1|23|2|A_2+T_1|14
row E6(-14)|4|1,1,1,0,0,-3|1,1,0,0,0,1|23|2|A_2+T_1|14
row E6(-14)|5|4,0,0,0,0,-2|2,0,0,0,0,2|24|1|G_2|8
row E6(-14)|6|0,3,0,0,1,-2|1,2,0,0,0,1|26|2|B_2+T_1|9
row E6(-14)|7|0,1,0,0,3,-6|1,2,0,0,0,1|26|2|B_2+T_1|9
row E6(-14)|8|0,2,2,0,2,-6|2,2,0,0,0,2|30|1|A_1+T_1|12

form E6(-26) 52 26
row E6(-26)|1|0,0,0,1|1,0,0,0,0,1|16|1|B_3|15
row E6(-26)|2|0,0,0,2|2,0,0,0,0,2|24|1|G_2|14

form E7(7) 63 70
row E7(7)|1|4,0,0,0,0,0,0|0,2,0,0,0,0,0|42|4|G_2|7
row E7(7)|2|0,0,0,0,0,0,4|0,2,0,0,0,0,0|42|4|G_2|7
row E7(7)|3|0,0,4,0,0,0,0|0,0,0,0,2,0,0|50|4|A_1|10
row E7(7)|4|0,0,0,0,4,0,0|0,0,0,0,2,0,0|50|4|A_1|10
row E7(7)|5|3,1,0,1,0,2,1|1,0,0,1,0,1,0|52|3|T_2|9
row E7(7)|6|1,2,0,1,0,1,3|1,0,0,1,0,1,0|52|3|T_2|9
row E7(7)|7|4,0,0,4,0,0,0|2,0,0,0,2,0,0|54|4|A_1|6
row E7(7)|8|0,0,0,4,0,0,4|2,0,0,0,2,0,0|54|4|A_1|6
row E7(7)|9|2,2,2,0,2,0,2|0,0,0,2,0,0,2|56|4|0|7
row E7(7)|10|2,0,2,0,2,2,2|0,0,0,2,0,0,2|56|4|0|7
row E7(7)|11|0,4,0,0,4,0,0|0,0,0,2,0,0,2|56|4|0|7
row E7(7)|12|0,0,4,0,0,4,0|0,0,0,2,0,0,2|56|4|0|7
row E7(7)|13|2,2,2,2,2,0,2|2,0,0,2,0,0,2|58|4|0|5
row E7(7)|14|2,0,2,2,2,2,2|2,0,0,2,0,0,2|58|4|0|5
row E7(7)|15|4,0,0,4,0,4,0|2,0,0,2,0,0,2|58|4|0|5
row E7(7)|16|0,4,0,4,0,0,4|2,0,0,2,0,0,2|58|4|0|5
row E7(7)|17|4,2,2,0,2,2,4|2,0,0,2,0,2,0|59|2|T_1|3
row E7(7)|18|2,4,2,2,2,2,2|2,0,0,2,0,2,2|60|4|0|3
row E7(7)|19|2,2,2,2,2,4,2|2,0,0,2,0,2,2|60|4|0|3
row E7(7)|20|4,4,0,4,0,4,0|2,0,0,2,0,2,2|60|4|0|3
row E7(7)|21|0,4,0,4,0,4,4|2,0,0,2,0,2,2|60|4|0|3
row E7(7)|22|4,4,0,4,4,0,4|2,2,2,0,2,0,2|61|2|0|2
row E7(7)|23|4,0,4,4,0,4,4|2,2,2,0,2,0,2|61|2|0|2
row E7(7)|24|4,4,4,4,0,4,4|2,2,2,0,2,2,2|62|2|0|1
row E7(7)|25|4,4,0,4,4,4,4|2,2,2,0,2,2,2|62|2|0|1
row E7(7)|26|8,4,4,4,4,4,4|2,2,2,2,2,2,2|63|2|0|0
row E7(7)|27|4,4,4,4,4,4,8|2,2,2,2,2,2,2|63|2|0|0

form E7(-5) 69 64
row E7(-5)|1|0,0,0,0,0,0,4|2,0,0,0,0,0,0|33|3|A_5|1
row E7(-5)|2|4,0,0,0,0,0,0|0,0,0,0,0,2,0|42|2|G_2+A_1|10
row E7(-5)|3|0,0,0,0,4,0,0|0,0,2,0,0,0,0|47|3|3A_1|13
row E7(-5)|4|0,0,0,2,0,0,4|0,0,2,0,0,0,0|47|3|3A_1|13
row E7(-5)|5|0,0,0,0,4,0,8|2,0,2,0,0,0,0|48|2|C_3|0
row E7(-5)|6|2,0,1,0,1,1,2|0,0,0,1,0,1,0|49|1|A_1+T_1|16
row E7(-5)|7|0,4,0,0,0,0,4|2,0,0,0,0,2,0|50|2|A_2+T_1|10
row E7(-5)|8|1,1,1,1,1,0,1|1,0,0,1,0,1,0|52|1|T_2|15
row E7(-5)|9|2,0,1,0,3,1,4|2,0,0,1,0,1,0|53|1|A_1+T_1|12
row E7(-5)|10|0,0,4,0,0,0,0|0,0,0,2,0,0,0|53|1|A_1|13
row E7(-5)|11|0,2,0,2,2,0,2|0,0,2,0,0,2,0|55|2|A_1|11
row E7(-5)|12|0,0,0,4,0,0,4|0,0,2,0,0,2,0|55|2|A_1|11
row E7(-5)|13|0,2,0,2,4,0,4|2,0,2,0,0,2,0|56|2|2A_1|7
row E7(-5)|14|0,4,0,0,4,0,8|2,0,2,0,0,2,0|56|2|2A_1|7
row E7(-5)|15|4,0,0,4,0,0,0|0,0,0,2,0,2,0|57|1|A_1|9
row E7(-5)|16|0,4,0,4,0,0,4|2,0,0,2,0,2,0|59|1|T_1|9
row E7(-5)|17|0,4,0,4,4,0,8|2,0,2,2,0,2,0|60|1|A_1|6

form E7(-25) 79 54
row E7(-25)|1|0,0,0,0,0,0,2|0,0,0,0,0,0,2|27|4|F_4|0
row E7(-25)|2|0,0,0,0,0,0,-2|0,0,0,0,0,0,2|27|4|F_4|0
row E7(-25)|3|0,1,0,0,1,0,-2|1,0,0,0,0,1,0|38|2|A_3+T_1|25
row E7(-25)|4|0,1,1,0,0,0,-3|1,0,0,0,0,1,0|38|2|A_3+T_1|25
row E7(-25)|5|2,0,0,0,0,2,-2|2,0,0,0,0,0,2|43|4|B_3|15
row E7(-25)|6|4,0,0,0,0,0,-2|2,0,0,0,0,0,2|43|4|B_3|15
row E7(-25)|7|0,0,0,0,0,4,-6|2,0,0,0,0,0,2|43|4|B_3|15
row E7(-25)|8|2,0,0,0,0,2,-6|2,0,0,0,0,0,2|43|4|B_3|15
row E7(-25)|9|2,2,0,0,0,2,-6|2,0,0,0,0,2,0|50|1|A_2+T_1|20
row E7(-25)|10|4,0,0,0,0,4,-6|2,0,0,0,0,2,2|51|2|G_2|14
row E7(-25)|11|4,0,0,0,0,4,-10|2,0,0,0,0,2,2|51|2|G_2|14

form E8(8) 120 128
row E8(8)|1|4,0,0,0,0,0,0,0|2,0,0,0,0,0,0,0|78|3|2G_2|14
row E8(8)|2|0,0,0,0,0,0,0,4|0,2,0,0,0,0,0,0|92|3|A_2|20
row E8(8)|3|2,1,0,1,0,1,0,0|0,0,0,1,0,0,0,1|96|3|A_1+T_1|20
row E8(8)|4|0,0,4,0,0,0,0,0|0,0,0,0,0,2,0,0|97|2|2A_1|17
row E8(8)|5|4,0,0,0,0,0,4,0|0,2,0,0,0,0,0,2|99|3|A_2|13
row E8(8)|6|2,0,2,0,0,2,0,0|0,0,0,0,2,0,0,0|104|3|0|16
row E8(8)|7|0,0,0,0,4,0,0,0|0,0,0,0,2,0,0,0|104|3|0|16
row E8(8)|8|0,2,0,0,2,0,0,2|0,0,0,0,2,0,0,0|104|3|0|16
row E8(8)|9|4,0,0,4,0,0,0,0|2,0,0,0,0,2,0,0|105|2|2A_1|9
row E8(8)|10|0,2,0,0,2,0,2,2|0,0,0,0,2,0,0,2|107|3|T_1|12
row E8(8)|11|0,0,4,0,0,0,4,0|0,0,0,0,2,0,0,2|107|3|T_1|12
row E8(8)|12|3,1,0,1,0,2,1,1|1,0,0,1,0,1,0,1|108|2|T_1|11
row E8(8)|13|1,3,1,1,1,1,0,1|1,0,0,1,0,1,0,2|109|2|T_1|10
row E8(8)|14|2,0,2,0,2,0,2,2|0,0,0,2,0,0,0,2|110|2|0|10
row E8(8)|15|0,4,0,0,4,0,0,0|0,0,0,2,0,0,0,2|110|2|0|10
row E8(8)|16|0,2,0,2,2,0,2,2|2,0,0,0,2,0,0,2|111|3|T_1|8
row E8(8)|17|4,0,0,4,0,0,4,0|2,0,0,0,2,0,0,2|111|3|T_1|8
row E8(8)|18|0,0,4,0,0,4,0,0|0,0,0,2,0,0,2,0|112|2|0|8
row E8(8)|19|2,2,2,0,2,0,2,2|0,0,0,2,0,0,2,0|112|2|0|8
row E8(8)|20|2,2,2,0,2,0,4,2|0,0,0,2,0,0,2,2|113|2|0|7
row E8(8)|21|0,4,0,0,4,0,4,0|0,0,0,2,0,0,2,2|113|2|0|7
row E8(8)|22|2,2,2,2,2,0,2,2|2,0,0,2,0,0,2,0|114|2|0|6
row E8(8)|23|4,0,0,4,0,4,0,0|2,0,0,2,0,0,2,0|114|2|0|6
row E8(8)|24|2,2,2,2,2,0,4,2|2,0,0,2,0,0,2,2|115|2|0|5
row E8(8)|25|0,4,0,4,0,0,4,4|2,0,0,2,0,0,2,2|115|2|0|5
row E8(8)|26|2,2,2,2,2,2,2,2|2,0,0,2,0,2,0,2|116|2|0|4
row E8(8)|27|4,4,0,4,0,4,0,0|2,0,0,2,0,2,0,2|116|2|0|4
row E8(8)|28|2,4,2,2,2,2,4,2|2,0,0,2,0,2,2,2|117|2|0|3
row E8(8)|29|4,4,0,4,0,4,4,0|2,0,0,2,0,2,2,2|117|2|0|3
row E8(8)|30|4,4,0,4,4,0,4,4|2,2,2,0,2,0,2,2|118|1|0|2
row E8(8)|31|4,4,4,4,0,4,4,4|2,2,2,0,2,2,2,2|119|1|0|1
row E8(8)|32|8,4,4,4,4,4,4,4|2,2,2,2,2,2,2,2|120|1|0|0

form E8(-24) 136 112
row E8(-24)|1|0,0,0,0,0,0,0,4|0,0,0,0,0,0,0,2|57|3|E_6|1
row E8(-24)|2|0,0,0,0,0,2,0,4|0,0,0,0,0,0,2,0|83|3|D_4|25
row E8(-24)|3|0,0,0,0,0,0,4,0|0,0,0,0,0,0,2,0|83|3|D_4|25
row E8(-24)|4|0,0,0,0,0,0,4,8|0,0,0,0,0,0,2,2|84|2|F_4|0
row E8(-24)|5|0,1,1,0,0,0,1,2|1,0,0,0,0,1,0,0|89|1|B_2+T_1|36
row E8(-24)|6|4,0,0,0,0,0,0,4|2,0,0,0,0,0,0,2|90|2|A_4|22
row E8(-24)|7|1,0,1,0,0,1,1,1|1,0,0,0,0,1,0,1|94|1|A_2+T_1|33
row E8(-24)|8|0,1,1,0,0,0,3,4|1,0,0,0,0,1,0,2|95|1|A_3|26
row E8(-24)|9|0,0,0,2,0,0,0,0|0,0,0,0,0,2,0,0|97|1|2A_1|33
row E8(-24)|10|2,0,0,0,0,2,2,2|2,0,0,0,0,0,2,0|99|2|G_2|23
row E8(-24)|11|0,0,0,0,0,4,0,4|2,0,0,0,0,0,2,0|99|2|G_2|23
row E8(-24)|12|2,0,0,0,0,2,4,4|2,0,0,0,0,0,2,2|100|2|B_3|15
row E8(-24)|13|4,0,0,0,0,0,4,8|2,0,0,0,0,0,2,2|100|2|B_3|15
row E8(-24)|14|0,0,0,2,0,2,0,0|2,0,0,0,0,2,0,0|105|1|2A_1|25
row E8(-24)|15|4,0,0,0,0,4,0,4|2,0,0,0,0,2,0,2|107|1|A_2|21
row E8(-24)|16|4,0,0,0,0,4,4,8|2,0,0,0,0,2,2,2|108|1|G_2|14
)NILORBDATA";

}  // namespace nilorb::detail
