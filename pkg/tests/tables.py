"""Published (M, p, rho, R) rows for the two Landau radius equations."""

TABLE_41 = [
    (1.1296, 2, 0.0714741, 0.0101601),
    (2, 2, 0.0206783, 0.00227639),
    (2.2976, 2, 0.0155966, 0.00151523),
    (3, 2, 0.00922255, 0.00067425),
    (1.1296, 3, 0.071463, 0.0101647),
    (2, 3, 0.0206782, 0.00227641),
    (2.2976, 3, 0.0155966, 0.00151523),
    (3, 3, 0.00922254, 0.000674251),
    (1.1296, 4, 0.0714629, 0.0101647),
    (2, 4, 0.0206782, 0.00227641),
    (2.2976, 4, 0.0155966, 0.00151523),
    (3, 4, 0.00922254, 0.000674251),
]

TABLE_42 = [
    (1.1296, 2, 0.0281673, 0.0000106985),
    (2, 2, 0.00856025, 1.73218e-7),
    (2.2976, 2, 0.00646284, 6.4986e-8),
    (3, 2, 0.0037942, 1.00669e-8),
    (1.1296, 3, 0.0281673, 8.48819e-9),
    (2, 3, 0.00856025, 1.2693e-11),
    (2.2976, 3, 0.00646284, 2.71435e-12),
    (3, 3, 0.0037942, 1.44922e-13),
]

TABLE_MS = [1.1296, 2, 2.2976, 3]
