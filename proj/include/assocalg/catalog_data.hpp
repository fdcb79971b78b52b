#pragma once

// Indecomposable complex associative algebras of dimension 2, 3 and 4,
// transcribed row by row from the published classification tables.
//
// Format (assocalg-catalog v1):
//   entry <id>                      starts a record
//   dim <n>
//   source <text>                   provenance of the transcription
//   param <name> [exclude=v1,v2]    symbolic parameter of a family of algebras
//   i j -> k : <expr>               e_i e_j has coefficient <expr> on e_k
//   claimed key=value ...           type labels and dim C / dim L / dim R cells
//   wedderburn N=<idx,..> S=<idx,..>
//   autfamily ... end               one printed automorphism matrix, row by row
//   autfamily corrects=<k> ... end  repaired copy of the k-th printed family
//     nonzero <expr>                extra admissibility condition
//     note <text>                   transcription remark
//   note <text>                     transcription remark for the entry

namespace assocalg::data {

inline constexpr const char* builtin_catalog_text = R"CATALOG(assocalg-catalog v1

# ---------------------------------------------------------------- dimension 2

entry As_2_1
dim 2
source dim-2 table, row As_2^1
1 1 -> 2 : 1
claimed commutative=yes unital=no nilpotent=yes dim_C=2 dim_L=1 dim_R=1
autfamily
  a 0
  b a^2
end

entry As_2_2
dim 2
source dim-2 table, row As_2^2
1 1 -> 1 : 1
1 2 -> 2 : 1
claimed commutative=no unital=no nilpotent=no dim_C=1 dim_L=1 dim_R=0
wedderburn N=2 S=1
autfamily
  1 0
  a b
end

entry As_2_3
dim 2
source dim-2 table, row As_2^3
1 1 -> 1 : 1
2 1 -> 2 : 1
claimed commutative=no unital=no nilpotent=no dim_C=1 dim_L=0 dim_R=1
wedderburn N=2 S=1
autfamily
  1 0
  a b
end

entry As_2_4
dim 2
source dim-2 table, row As_2^4
1 1 -> 1 : 1
1 2 -> 2 : 1
2 1 -> 2 : 1
claimed commutative=yes unital=yes nilpotent=no dim_C=2 dim_L=0 dim_R=0
wedderburn N=2 S=1
autfamily
  1 0
  0 a
end

# ---------------------------------------------------------------- dimension 3

entry As_3_1
dim 3
source dim-3 table, row As_3^1
1 3 -> 2 : 1
3 1 -> 2 : 1
claimed commutative=yes unital=no nilpotent=yes dim_C=3 dim_L=1 dim_R=1
autfamily
  a 0 0
  b a*c d
  0 0 c
end
autfamily
  0 0 a
  b a*c d
  c 0 0
end

entry As_3_2
dim 3
source dim-3 table, row As_3^2
param alpha exclude=1
1 3 -> 2 : 1
3 1 -> 2 : alpha
claimed commutative=no unital=no nilpotent=yes dim_C=2 dim_L=1 dim_R=1
autfamily
  a 0 0
  b a*c d
  0 0 c
end
autfamily
  0 0 a
  b a*c d
  c 0 0
  note repeats the As_3_1 matrix; an automorphism only when (alpha-1)*a*c = 0, i.e. at the excluded alpha=1
end
autfamily
  a 0 b
  c a*f-b*e d
  e 0 f
  note an automorphism only at alpha=-1; other alpha force (alpha+1)*a*e = 0
end

entry As_3_3
dim 3
source dim-3 table, row As_3^3
1 1 -> 2 : 1
1 2 -> 3 : 1
2 1 -> 3 : 1
claimed commutative=yes unital=no nilpotent=yes dim_C=3 dim_L=1 dim_R=1
autfamily
  a 0 0
  b a^2 0
  c 2*a*b a^3
end

entry As_3_4
dim 3
source dim-3 table, row As_3^4
1 3 -> 2 : 1
2 3 -> 2 : 1
3 3 -> 3 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=0 dim_R=2
wedderburn N=1,2 S=3
autfamily
  a 0 0
  b a+b c
  0 0 1
end

entry As_3_5
dim 3
source dim-3 table, row As_3^5
2 3 -> 2 : 1
3 1 -> 1 : 1
3 3 -> 3 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=1 dim_R=1
wedderburn N=1,2 S=3
autfamily
  a 0 b
  0 c d
  0 0 1
end

entry As_3_6
dim 3
source dim-3 table, row As_3^6
3 1 -> 2 : 1
3 2 -> 2 : 1
3 3 -> 3 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=2 dim_R=0
wedderburn N=1,2 S=3
autfamily
  a 0 0
  b a+b c
  0 0 1
end

entry As_3_7
dim 3
source dim-3 table, row As_3^7
1 2 -> 1 : 1
2 2 -> 2 : 1
3 1 -> 1 : 1
3 3 -> 3 : 1
claimed commutative=no unital=yes nilpotent=no dim_C=2 dim_L=0 dim_R=0
wedderburn N=1 S=2,3
autfamily
  a b -b
  0 1 0
  0 0 1
end

entry As_3_8
dim 3
source dim-3 table, row As_3^8
1 3 -> 1 : 1
2 3 -> 2 : 1
3 1 -> 1 : 1
3 3 -> 3 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=0 dim_R=1
wedderburn N=1,2 S=3
autfamily
  a 0 0
  0 b c
  0 0 1
end

entry As_3_9
dim 3
source dim-3 table, row As_3^9
2 3 -> 2 : 1
3 1 -> 1 : 1
3 2 -> 2 : 1
3 3 -> 3 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=1 dim_R=0
wedderburn N=1,2 S=3
autfamily
  a 0 b
  0 c 0
  0 0 1
end

entry As_3_10
dim 3
source dim-3 table, row As_3^10
1 3 -> 1 : 1
2 3 -> 2 : 1
3 1 -> 1 : 1
3 2 -> 2 : 1
3 3 -> 3 : 1
claimed commutative=yes unital=yes nilpotent=no dim_C=3 dim_L=0 dim_R=0
wedderburn N=1,2 S=3
autfamily
  a b 0
  c d 0
  0 0 1
end

entry As_3_11
dim 3
source dim-3 table, row As_3^11
1 3 -> 2 : 1
2 3 -> 2 : 1
3 1 -> 2 : 1
3 2 -> 2 : 1
3 3 -> 3 : 1
claimed commutative=yes unital=no nilpotent=no dim_C=3 dim_L=0 dim_R=0
wedderburn N=1,2 S=3
autfamily
  a 0 0
  b a+b 0
  0 0 1
end

entry As_3_12
dim 3
source dim-3 table, row As_3^12
1 1 -> 2 : 1
1 3 -> 1 : 1
2 3 -> 2 : 1
3 1 -> 1 : 1
3 2 -> 2 : 1
3 3 -> 3 : 1
claimed commutative=yes unital=yes nilpotent=no dim_C=3 dim_L=0 dim_R=0
wedderburn N=1,2 S=3
autfamily
  a 0 0
  b a^2 0
  0 0 1
end

# ---------------------------------------------------------------- dimension 4

entry As_4_1
dim 4
source dim-4 table, row As_4^1
1 2 -> 3 : 1
2 1 -> 4 : 1
claimed commutative=no unital=no nilpotent=yes dim_C=3 dim_L=2 dim_R=2
autfamily
  a 0 0 0
  0 a 0 0
  b c a^2 0
  d e 0 a^2
end
autfamily
  0 a 0 0
  b 0 0 0
  c d 0 a*b
  e f a*b 0
end

entry As_4_2
dim 4
source dim-4 table, row As_4^2
1 2 -> 4 : 1
3 1 -> 4 : 1
claimed commutative=no unital=no nilpotent=yes dim_C=3 dim_L=2 dim_R=2
autfamily
  a 0 0 0
  c b 0 0
  -c 0 b 0
  d e f a*b
end

entry As_4_3
dim 4
source dim-4 table, row As_4^3
1 2 -> 3 : 1
2 1 -> 4 : 1
2 2 -> 3 : -1
claimed commutative=no unital=no nilpotent=yes dim_C=3 dim_L=2 dim_R=2
autfamily
  a 0 0 0
  0 a 0 0
  b c a^2 0
  d e 0 a^2
end

entry As_4_4
dim 4
source dim-4 table, row As_4^4
1 2 -> 3 : 1
2 2 -> 4 : 1
2 1 -> 3 : -1
claimed commutative=no unital=no nilpotent=yes dim_C=3 dim_L=2 dim_R=2
autfamily
  a c 0 0
  0 b 0 0
  d e a*b 0
  f g 0 b^2
end

entry As_4_5
dim 4
source dim-4 table, row As_4^5
1 2 -> 4 : 1
3 3 -> 4 : 1
2 1 -> 4 : -1
claimed commutative=no unital=no nilpotent=yes dim_C=3 dim_L=1 dim_R=1
autfamily
  a -b^2/c 0 0
  c 0 0 0
  0 0 b 0
  d e f b^2
end
autfamily
  (d^2+a*b)/c a 0 0
  b c 0 0
  0 0 d 0
  e f h d^2
end

entry As_4_6
dim 4
source dim-4 table, row As_4^6(alpha)
param alpha exclude=1
1 2 -> 4 : 1
2 2 -> 3 : 1
2 1 -> 4 : (1+alpha)/(1-alpha)
claimed commutative=no unital=no nilpotent=yes dim_C=3 dim_L=2 dim_R=2
autfamily
  a c 0 0
  0 b 0 0
  d e b^2 0
  f g b*c*(1+alpha) a*b
  note printed cell (4,3) disagrees with phi(e2)^2 = phi(e3), which forces 2*b*c/(1-alpha)
end
autfamily corrects=1
  a c 0 0
  0 b 0 0
  d e b^2 0
  f g 2*b*c/(1-alpha) a*b
  note cell (4,3) replaced by 2*b*c/(1-alpha)
end

entry As_4_7
dim 4
source dim-4 table, row As_4^7
1 1 -> 1 : 1
1 4 -> 4 : 1
2 1 -> 2 : 1
2 4 -> 3 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=2 dim_R=2
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  a b 0 0
  a*c b*c b*d a*d
  c 0 0 d
end

entry As_4_8
dim 4
source dim-4 table, row As_4^8
1 1 -> 1 : 1
3 1 -> 3 : 1
4 3 -> 2 : 1
2 1 -> 2 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=0 dim_R=2
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  a b*c d e
  -e/c 0 b 0
  0 0 0 c
end

entry As_4_9
dim 4
source dim-4 table, row As_4^9
1 1 -> 1 : 1
1 3 -> 3 : 1
1 2 -> 2 : 1
3 4 -> 2 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=2 dim_R=0
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  a b*c d -c*e
  e 0 b 0
  0 0 0 c
end

entry As_4_10
dim 4
source dim-4 table, row As_4^10
1 1 -> 3 : 1
1 3 -> 4 : 1
2 2 -> 4 : -1
3 1 -> 4 : 1
claimed commutative=yes unital=no nilpotent=yes dim_C=4 dim_L=1 dim_R=1
autfamily
  cbrt(a^2) 0 0 0
  b a 0 0
  c b*cbrt(a) cbrt(a^2) 0
  d e 2*c*cbrt(a^2)-b^2 a^2
  note printed cell (3,3) reads cbrt(a^2); phi(e1)^2 = phi(e3) forces a*cbrt(a)
end
autfamily corrects=1
  cbrt(a^2) 0 0 0
  b a 0 0
  c b*cbrt(a) a*cbrt(a) 0
  d e 2*c*cbrt(a^2)-b^2 a^2
  note cell (3,3) replaced by a*cbrt(a)
end

entry As_4_11
dim 4
source dim-4 table, row As_4^11
1 1 -> 4 : 1
2 1 -> 3 : 1
1 4 -> 3 : -1
4 1 -> 3 : -1
claimed commutative=no unital=no nilpotent=yes dim_C=3 dim_L=1 dim_R=2
autfamily
  a 0 0 0
  b a^2 0 0
  c d a^3 a*(b-2*e)
  e 0 0 a^2
end

entry As_4_12
dim 4
source dim-4 table, row As_4^12
1 1 -> 1 : 1
1 2 -> 2 : 1
3 1 -> 3 : 1
4 1 -> 4 : 1
claimed commutative=no unital=no nilpotent=no dim_C=3 dim_L=1 dim_R=2
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  a b 0 0
  c 0 d e
  f 0 g h
end

entry As_4_13
dim 4
source dim-4 table, row As_4^13
2 2 -> 2 : 1
2 3 -> 3 : 1
2 4 -> 4 : 1
1 2 -> 1 : 1
claimed commutative=no unital=no nilpotent=no dim_C=3 dim_L=2 dim_R=1
wedderburn N=1,3,4 S=2
autfamily
  a b 0 0
  0 1 0 0
  0 c d e
  0 f g h
end

entry As_4_14
dim 4
source dim-4 table, row As_4^14
1 1 -> 1 : 1
3 1 -> 3 : 1
4 1 -> 4 : 1
2 1 -> 2 : 1
claimed commutative=no unital=no nilpotent=no dim_C=3 dim_L=0 dim_R=3
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  a b c d
  e f g h
  i j k l
end

entry As_4_15
dim 4
source dim-4 table, row As_4^15
2 2 -> 2 : 1
2 3 -> 3 : 1
2 4 -> 4 : 1
2 1 -> 1 : 1
claimed commutative=no unital=no nilpotent=no dim_C=3 dim_L=3 dim_R=0
wedderburn N=1,3,4 S=2
autfamily
  a b c d
  0 1 0 0
  e f g h
  i j k l
end

entry As_4_16
dim 4
source dim-4 table, row As_4^16(alpha)
param alpha
1 1 -> 4 : 1
1 2 -> 4 : 1
2 1 -> 4 : alpha
3 3 -> 4 : 1
claimed commutative=no unital=no nilpotent=yes dim_C=3 dim_L=1 dim_R=1
autfamily
  a 0 0 0
  0 a 0 0
  0 0 a 0
  b c d a^2
end
autfamily
  a 0 0 0
  b c^2/a 0 0
  0 0 c 0
  d e f c^2
  note holds only on the locus c^2 = a^2 + (1+alpha)*a*b, which the table does not print
end
autfamily corrects=2
  a 0 0 0
  (c^2-a^2)/((1+alpha)*a) c^2/a 0 0
  0 0 c 0
  d e f c^2
  note b solved from c^2 = a^2 + (1+alpha)*a*b; needs alpha != -1
end

entry As_4_17
dim 4
source dim-4 table, row As_4^17
1 1 -> 4 : 1
1 2 -> 3 : 1
2 1 -> 3 : -1
2 2 -> 3 : -2
2 2 -> 4 : 1
claimed commutative=no unital=no nilpotent=yes dim_C=3 dim_L=2 dim_R=2
autfamily
  a 0 0 0
  0 a 0 0
  b c a^2 0
  d e 0 a^2
end
autfamily
  0 a 0 0
  a 0 0 0
  b c -a^2 -2*a^2
  d e 0 a^2
end

entry As_4_18
dim 4
source dim-4 table, row As_4^18(alpha)
param alpha
1 1 -> 4 : 1
1 2 -> 3 : 1
2 1 -> 4 : -alpha
2 2 -> 3 : -1
claimed commutative=no unital=no nilpotent=yes dim_C=3 dim_L=2 dim_R=2
autfamily
  a 0 0 0
  0 a 0 0
  b c a^2 0
  d e 0 a^2
end
autfamily
  0 a 0 0
  a 0 0 0
  b c -a^2 -2*a^2
  d e 0 a^2
  note exchanging e1 and e2 is compatible with the products only at alpha=1, and the printed third and fourth columns disagree with phi(e1)^2 = phi(e4) even there
end

entry As_4_19
dim 4
source dim-4 table, row As_4^19
1 1 -> 1 : 1
2 2 -> 2 : 1
2 3 -> 3 : 1
3 1 -> 3 : 1
4 1 -> 4 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=0 dim_R=1
wedderburn N=3,4 S=1,2
autfamily
  1 0 0 0
  0 1 0 0
  a -a b 0
  c 0 0 d
end

entry As_4_20
dim 4
source dim-4 table, row As_4^20
1 1 -> 1 : 1
1 3 -> 3 : 1
1 4 -> 4 : 1
2 2 -> 2 : 1
3 2 -> 3 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=1 dim_R=0
wedderburn N=3,4 S=1,2
autfamily
  1 0 0 0
  0 1 0 0
  a -a b 0
  c 0 0 d
end

entry As_4_21
dim 4
source dim-4 table, row As_4^21
1 1 -> 1 : 1
2 2 -> 2 : 1
2 4 -> 4 : 1
4 1 -> 4 : 1
3 2 -> 3 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=0 dim_R=1
wedderburn N=3,4 S=1,2
autfamily
  1 0 0 0
  0 1 0 0
  0 a b 0
  c -c 0 d
end

entry As_4_22
dim 4
source dim-4 table, row As_4^22
2 2 -> 2 : 1
2 4 -> 4 : 1
3 3 -> 3 : 1
3 1 -> 1 : 1
1 2 -> 1 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=1 dim_R=0
wedderburn N=1,4 S=2,3
autfamily
  a b -b 0
  0 1 0 0
  0 0 1 0
  0 c 0 d
end

entry As_4_23
dim 4
source dim-4 table, row As_4^23
1 1 -> 4 : 1
1 4 -> 3 : -1
2 1 -> 3 : 1
2 2 -> 3 : 1
4 1 -> 3 : -1
claimed commutative=no unital=no nilpotent=yes dim_C=3 dim_L=1 dim_R=1
autfamily
  note printed cell (4,3) reads a lowercase letter o; transcribed as 0
  1 0 0 0
  a 1 0 0
  b c 1 a*(a+1)-2*d
  d a 0 1
end

entry As_4_24
dim 4
source dim-4 table, row As_4^24
2 2 -> 2 : 1
2 3 -> 3 : 1
2 1 -> 1 : 1
4 2 -> 4 : 1
1 2 -> 1 : 1
claimed commutative=no unital=no nilpotent=no dim_C=3 dim_L=1 dim_R=1
wedderburn N=1,3,4 S=2
autfamily
  note printed cell (4,3) reads a lowercase letter o; transcribed as 0
  a 0 0 0
  0 1 0 0
  0 b c 0
  0 d 0 e
end

entry As_4_25
dim 4
source dim-4 table, row As_4^25
1 2 -> 4 : 1
1 3 -> 4 : 1
2 1 -> 4 : -1
2 2 -> 4 : 1
3 1 -> 4 : 1
claimed commutative=no unital=no nilpotent=yes dim_C=3 dim_L=1 dim_R=1
autfamily
  a 0 0 0
  b a 0 0
  -b^2/(2*a) -b a 0
  c d e a^2
end

entry As_4_26
dim 4
source dim-4 table, row As_4^26
1 1 -> 1 : 1
1 2 -> 2 : 1
2 1 -> 2 : 1
4 1 -> 4 : 1
3 1 -> 3 : 1
claimed commutative=no unital=no nilpotent=no dim_C=3 dim_L=0 dim_R=2
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  0 a 0 0
  b 0 c d
  e 0 f g
end

entry As_4_27
dim 4
source dim-4 table, row As_4^27
1 1 -> 1 : 1
1 2 -> 2 : 1
1 4 -> 4 : 1
1 3 -> 3 : 1
2 1 -> 2 : 1
claimed commutative=no unital=no nilpotent=no dim_C=3 dim_L=2 dim_R=0
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  0 a 0 0
  b 0 c d
  e 0 f g
end

entry As_4_28
dim 4
source dim-4 table, row As_4^28(alpha)
param alpha
1 1 -> 4 : 1
1 2 -> 4 : alpha
2 1 -> 4 : -alpha
2 2 -> 4 : 1
3 3 -> 4 : 1
claimed commutative=no unital=no nilpotent=yes dim_C=3 dim_L=1 dim_R=1
autfamily
  a b c d
  e f g h
  i j k l
  0 0 0 a*f-b*e
  note the 3x3 block is printed without constraints; the products require it to preserve the pairing e_i e_j on span(e1,e2,e3) and phi(e4) to lie in span(e4)
end

entry As_4_29
dim 4
source dim-4 table, row As_4^29
1 1 -> 1 : 1
1 3 -> 3 : 1
2 2 -> 2 : 1
2 4 -> 4 : 1
3 1 -> 3 : 1
4 1 -> 4 : 1
claimed commutative=no unital=yes nilpotent=no dim_C=3 dim_L=0 dim_R=0
wedderburn N=3,4 S=1,2
autfamily
  1 0 0 0
  0 1 0 0
  0 0 a 0
  b -b 0 c
end

entry As_4_30
dim 4
source dim-4 table, row As_4^30
1 1 -> 1 : 1
1 3 -> 3 : 1
1 4 -> 4 : 1
2 2 -> 2 : 1
3 1 -> 3 : 1
4 2 -> 4 : 1
claimed commutative=no unital=yes nilpotent=no dim_C=3 dim_L=0 dim_R=0
wedderburn N=3,4 S=1,2
autfamily
  1 0 0 0
  0 1 0 0
  0 0 a 0
  b -b 0 c
end

entry As_4_31
dim 4
source dim-4 table, row As_4^31
1 1 -> 1 : 1
1 4 -> 4 : 1
2 2 -> 2 : 1
2 3 -> 3 : 1
3 1 -> 3 : 1
4 2 -> 4 : 1
claimed commutative=no unital=yes nilpotent=no dim_C=2 dim_L=0 dim_R=0
wedderburn N=3,4 S=1,2
autfamily
  0 1 0 0
  1 0 0 0
  a -a 0 b
  c -c d 0
end
autfamily
  1 0 0 0
  0 1 0 0
  a -a b 0
  c -c 0 d
end

entry As_4_32
dim 4
source dim-4 table, row As_4^32
2 1 -> 3 : 1
3 4 -> 3 : 1
4 2 -> 2 : 1
4 3 -> 3 : 1
4 4 -> 4 : 1
1 4 -> 1 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=0 dim_R=0
wedderburn N=1,2,3 S=4
autfamily
  a 0 0 -d/b
  0 b 0 c
  -a*c d a*b c*d/b
  0 0 0 1
end

entry As_4_33
dim 4
source dim-4 table, row As_4^33
1 1 -> 2 : 1
1 2 -> 3 : 1
1 3 -> 4 : 1
2 1 -> 3 : 1
2 2 -> 4 : 1
3 1 -> 4 : 1
claimed commutative=yes unital=no nilpotent=yes dim_C=4 dim_L=1 dim_R=1
autfamily
  a 0 0 0
  b a^2 0 0
  c 2*a*b a^3 0
  d 2*a*c+b^2 3*a^2*b a^4
end

entry As_4_34
dim 4
source dim-4 table, row As_4^34
2 2 -> 2 : 1
2 3 -> 3 : 1
2 4 -> 4 : 1
2 1 -> 1 : 1
4 2 -> 4 : 1
4 3 -> 1 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=2 dim_R=0
wedderburn N=1,3,4 S=2
autfamily
  a*b c d a*e
  0 1 0 0
  0 e b 0
  0 0 0 a
end

entry As_4_35
dim 4
source dim-4 table, row As_4^35
1 2 -> 1 : 1
3 2 -> 3 : 1
2 2 -> 2 : 1
2 4 -> 4 : 1
3 4 -> 1 : 1
4 2 -> 4 : 1
claimed commutative=no unital=no nilpotent=no dim_C=2 dim_L=0 dim_R=2
wedderburn N=1,3,4 S=2
autfamily
  a*b c d a*e
  0 1 0 0
  0 e b 0
  0 0 0 a
end

entry As_4_36
dim 4
source dim-4 table, row As_4^36
1 1 -> 1 : 1
2 2 -> 2 : 1
2 3 -> 3 : 1
2 4 -> 4 : 1
3 1 -> 3 : 1
4 1 -> 4 : 1
claimed commutative=no unital=yes nilpotent=no dim_C=2 dim_L=0 dim_R=0
wedderburn N=3,4 S=1,2
autfamily
  1 0 0 0
  0 1 0 0
  a -a b c
  d -d e f
end

entry As_4_37
dim 4
source dim-4 table, row As_4^37
1 1 -> 1 : 1
1 2 -> 2 : 1
1 3 -> 3 : 1
2 1 -> 2 : 1
3 1 -> 3 : 1
4 1 -> 4 : 1
claimed commutative=no unital=no nilpotent=no dim_C=3 dim_L=0 dim_R=1
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  0 a b 0
  0 c d 0
  e 0 0 f
end

entry As_4_38
dim 4
source dim-4 table, row As_4^38
1 1 -> 1 : 1
1 2 -> 2 : 1
1 3 -> 3 : 1
1 4 -> 4 : 1
2 1 -> 2 : 1
3 1 -> 3 : 1
claimed commutative=no unital=no nilpotent=no dim_C=3 dim_L=1 dim_R=0
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  0 a b 0
  0 c d 0
  e 0 0 f
end

entry As_4_39
dim 4
source dim-4 table, row As_4^39
1 1 -> 1 : 1
1 2 -> 2 : 1
1 3 -> 3 : 1
2 1 -> 2 : 1
2 2 -> 3 : 1
4 1 -> 4 : 1
3 1 -> 3 : 1
claimed commutative=no unital=no nilpotent=no dim_C=3 dim_L=0 dim_R=1
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  0 a 0 0
  0 b a^2 0
  c 0 0 d
end

entry As_4_40
dim 4
source dim-4 table, row As_4^40
1 1 -> 1 : 1
1 2 -> 2 : 1
1 3 -> 3 : 1
1 4 -> 4 : 1
2 1 -> 2 : 1
3 1 -> 3 : 1
4 1 -> 4 : 1
claimed commutative=yes unital=yes nilpotent=no dim_C=4 dim_L=0 dim_R=0
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  0 a b c
  0 d e f
  0 i j k
end

entry As_4_41
dim 4
source dim-4 table, row As_4^41
1 1 -> 1 : 1
1 2 -> 2 : 1
1 4 -> 4 : 1
1 3 -> 3 : 1
2 1 -> 2 : 1
2 2 -> 3 : 1
3 1 -> 3 : 1
claimed commutative=no unital=no nilpotent=no dim_C=3 dim_L=1 dim_R=0
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  0 a 0 0
  0 b a^2 0
  c 0 0 d
end

entry As_4_42
dim 4
source dim-4 table, row As_4^42
1 1 -> 1 : 1
1 2 -> 2 : 1
2 3 -> 1 : 1
2 4 -> 2 : 1
3 1 -> 3 : 1
3 2 -> 4 : 1
4 3 -> 3 : 1
4 4 -> 4 : 1
claimed commutative=no unital=yes nilpotent=no dim_C=2 dim_L=0 dim_R=0
wedderburn N=2,3 S=1,4
autfamily
  1 a 0 0
  0 1/b 0 0
  -a*b -a^2*b b a*b
  0 -a 0 1
end

entry As_4_43
dim 4
source dim-4 table, row As_4^43
1 1 -> 1 : 1
1 2 -> 2 : 1
1 3 -> 3 : 1
1 4 -> 4 : 1
2 1 -> 2 : 1
2 2 -> 4 : 1
3 1 -> 3 : 1
4 1 -> 4 : 1
claimed commutative=yes unital=yes nilpotent=no dim_C=4 dim_L=0 dim_R=0
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  0 a 0 0
  0 b c 0
  0 d e a^2
end

entry As_4_44
dim 4
source dim-4 table, row As_4^44(alpha)
param alpha
1 1 -> 1 : 1
1 2 -> 2 : 1
1 3 -> 3 : 1
1 4 -> 4 : 1
2 1 -> 2 : 1
2 3 -> 4 : alpha
3 1 -> 3 : 1
3 2 -> 4 : 1
4 1 -> 4 : 1
claimed commutative=no unital=yes nilpotent=no dim_C=3 dim_L=0 dim_R=0
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  0 0 a 0
  0 b 0 0
  0 c d a*b
  note an automorphism only at alpha=1, which is not among the standard samples
end
autfamily
  1 0 0 0
  0 a 0 0
  0 0 b 0
  0 c d a*b
end
autfamily
  1 0 0 0
  0 a b 0
  0 c d 0
  0 e f a*d-b*c
  note an automorphism only at alpha=-1; other alpha force (alpha+1)*a*c = 0
end

entry As_4_45
dim 4
source dim-4 table, row As_4^45
1 1 -> 1 : 1
1 2 -> 2 : 1
1 3 -> 3 : 1
1 4 -> 4 : 1
2 1 -> 2 : 1
2 2 -> 3 : 1
2 3 -> 4 : 1
3 1 -> 3 : 1
3 2 -> 4 : 1
4 1 -> 4 : 1
claimed commutative=yes unital=yes nilpotent=no dim_C=4 dim_L=0 dim_R=0
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  0 a 0 0
  0 b a^2 0
  0 c 2*a^2*b a^3
  note printed cell (4,3) reads 2*a^2*b; phi(e2)^2 = phi(e3) forces 2*a*b
end
autfamily corrects=1
  1 0 0 0
  0 a 0 0
  0 b a^2 0
  0 c 2*a*b a^3
  note cell (4,3) replaced by 2*a*b
end

entry As_4_46
dim 4
source dim-4 table, row As_4^46
1 1 -> 1 : 1
1 2 -> 2 : 1
1 3 -> 3 : 1
1 4 -> 4 : 1
2 1 -> 2 : 1
2 2 -> 4 : -1
2 3 -> 4 : -1
3 1 -> 3 : 1
3 2 -> 4 : 1
4 1 -> 4 : 1
claimed commutative=no unital=yes nilpotent=no dim_C=3 dim_L=0 dim_R=0
wedderburn N=2,3,4 S=1
autfamily
  1 0 0 0
  0 a 0 0
  0 b a^2 0
  0 c 2*a^2*b a^3
  note repeats the As_4_45 matrix verbatim; with e2e2=-e4 it is an automorphism only at a=1
end
)CATALOG";

}  // namespace assocalg::data
