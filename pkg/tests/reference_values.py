"""Frozen high-precision reference values.

Generated once with an independent 60-digit mpmath transcription of the
closed forms (written separately from the package code), evaluated at the
exact double-precision parameters the package receives.  Values are strings
to keep all digits.
"""

# Dicke zeta for spin and photon at |xi - 1| = 1e-4; the photon column was
# obtained from the spin expression through the exchange rule.
DICKE_REF = [  # (xi, psi, t, zeta_spin, zeta_photon)
    (1.0001, 8.0, 4459.65, '0.023036533092721016947', '1.0000349911624523295'),
    (1.0001, 8.0, 17152.52, '0.99989232761165097543', '0.99999997349121259594'),
    (1.0001, 8.0, 26414.87, '0.020746313161735689787', '1.0001630118547108344'),
    (0.9999, 8.0, 3153.37, '0.026740809138319289308', '0.99986235406512191773'),
    (0.9999, 8.0, 12128.36, '0.99999452534091481405', '0.99999979572837185729'),
    (0.9999, 8.0, 18677.67, '0.023413745490870544221', '1.0001626006385659234'),
    (1.0001, 2.944439, 356.53, '0.23133153053417893456', '1.0185169313768374585'),
    (1.0001, 2.944439, 1371.28, '0.98529115618393839185', '0.9984843696314257953'),
    (1.0001, 2.944439, 2111.78, '0.22824335303793465039', '1.000535122335827655'),
    (0.9999, 2.944439, 252.1, '0.23304500537221178892', '1.0003139685738475707'),
    (0.9999, 2.944439, 969.62, '0.99170065963311398613', '0.99973768424769996708'),
    (0.9999, 2.944439, 1493.21, '0.23205638240365371232', '1.0225998528690110338'),
    (1.0001, 0.0, 115.51, '0.70713738568485228291', '0.70713738568485228291'),
    (1.0001, 0.0, 444.28, '0.99722930008024103943', '0.99722930008024103943'),
    (1.0001, 0.0, 684.2, '0.7074433286692314355', '0.7074433286692314355'),
    (0.9999, 0.0, 81.68, '0.84767643279280387262', '0.84763460440658786826'),
    (0.9999, 0.0, 314.16, '0.86928888129816552424', '0.86927484595349312716'),
    (0.9999, 0.0, 483.81, '0.8337141584545730235', '0.83367284751780210217'),
    (1.0001, -2.944439, 356.53, '1.0185169313768374585', '0.23133153053417893456'),
    (1.0001, -2.944439, 1371.28, '0.9984843696314257953', '0.98529115618393839185'),
    (1.0001, -2.944439, 2111.78, '1.000535122335827655', '0.22824335303793465039'),
    (0.9999, -2.944439, 252.13, '1.0115749106281757446', '0.23622496333614259123'),
    (0.9999, -2.944439, 969.72, '0.998198040623978514', '0.98601285405339584187'),
    (0.9999, -2.944439, 1493.36, '0.9748373262870271219', '0.22386904443812929005'),
]

# OAT zeta from the direct (unstable) expression at |xi - 1| = 1e-8.
OAT_REF = [  # (side, xi, t, zeta)
    ('ordered', 0.99999999, 222.144, '0.0045022339504526941957'),
    ('ordered', 0.99999999, 5553.604, '0.00019999998674303339731'),
    ('ordered', 0.99999999, 11107.207, '0.00014142135623906041505'),
    ('ordered', 0.99999999, 19992.973, '0.00045764899144753074047'),
    ('disordered', 1.00000001, 314.159, '0.003183592942238216331'),
    ('disordered', 1.00000001, 7853.982, '0.00014142134829202355625'),
    ('disordered', 1.00000001, 15707.963, '0.000099999999196126487418'),
    ('disordered', 1.00000001, 28274.334, '0.00032360678174068415329'),
]
