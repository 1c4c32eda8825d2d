"""Values transcribed from the worked A4 example (linear quiver 1->2->3->4)."""

A4_ARROWS = ((1, 2), (2, 3), (3, 4))

# as printed, initial matrix first; the arrows between them are labelled mu_2, mu_1, mu_4, mu_3, mu_1, mu_2
A4_CMATRICES = (
    ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    ((1, 0, 0, 0), (0, -1, 1, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    ((-1, 0, 1, 0), (0, -1, 1, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    ((-1, 0, 1, 0), (0, -1, 1, 0), (0, 0, 1, 0), (0, 0, 0, -1)),
    ((0, 0, -1, 0), (1, -1, -1, 0), (1, 0, -1, 0), (0, 0, 0, -1)),
    ((0, 0, -1, 0), (-1, 0, 0, 0), (-1, 1, 0, 0), (0, 0, 0, -1)),
    ((0, 0, -1, 0), (-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 0, -1)),
)

# the sequence as written in the text, and the one the printed arrows follow
A4_WALK_AS_WRITTEN = (2, 1, 4, 1, 2, 3)
A4_WALK = (2, 1, 4, 3, 1, 2)

A4_BRICKS = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (1, 1, 1, 0), (0, 1, 1, 0), (0, 0, 1, 0))
A4_BRICK_INTERVALS = ("2..2", "1..1", "4..4", "1..3", "2..3", "3..3")

A4_ALPHA = (2, 1, 20, 3)
A4_BETA = (1, 1, 1, 1)
