# search/fixtures.py

from pydantic import BaseModel, model_validator

from congruence.pipeline import DiscriminantSet
from linalg.relations import RelationVector
from utils import d_of

# k = (D + 1) / 24 for each coefficient of the two printed identities
IDENTITY_1_KS = {
    2: [
        2, 4, 6, 8, 10, 11, 20, 22, 23, 25, 32, 35, 48, 52, 53, 54, 55, 56, 57, 58, 60, 61, 64, 68, 70, 73, 75,
        78, 81, 85, 86, 88, 91, 92, 94, 97, 98, 101, 102, 103, 105, 106, 107, 109, 111, 112, 114, 115, 117, 121,
        125, 129, 130, 132, 135, 137, 139, 143, 144, 147, 152, 153, 155, 159, 160, 163, 164, 167, 168, 169, 171,
        173, 177, 178, 180, 181, 182, 184, 185, 186, 188, 189, 190, 191, 195, 196, 197, 198, 201, 204, 208, 211,
        214, 215, 216, 218, 220, 226, 227, 228, 229, 231, 232, 235, 241, 242, 247, 252, 254, 255, 256, 260, 261,
        262, 263, 266, 269, 271, 276, 281, 282, 283, 284, 286, 287, 291, 296, 298, 301, 304, 309,
    ],
}

IDENTITY_2_KS = {
    1: [
        1, 2, 3, 12, 13, 20, 21, 29, 32, 36, 67, 69, 73, 75, 84, 95, 100, 103, 115, 120, 121, 132, 133, 140, 143,
        147, 160, 164, 165, 166, 167, 168, 176, 177, 181, 185, 187, 188, 189, 190, 192, 195, 197, 200, 207, 208,
        210, 211, 214, 215, 218, 219, 221, 225, 228, 231, 239, 248, 250, 255, 270, 276, 291, 302, 305, 312,
    ],
    2: [
        4, 9, 15, 22, 27, 31, 43, 51, 59, 60, 63, 66, 68, 78, 79, 87, 101, 102, 107, 108, 110, 111, 112, 113, 118,
        119, 126, 139, 141, 144, 151, 152, 154, 159, 161, 170, 172, 178, 183, 184, 193, 209, 212, 216, 236, 242,
        246, 247, 260, 262, 269, 272, 284, 296, 298,
    ],
    3: [
        5, 6, 7, 10, 11, 16, 23, 26, 28, 33, 35, 37, 42, 44, 48, 52, 54, 65, 70, 72, 77, 80, 83, 86, 89, 91, 93,
        97, 104, 105, 109, 114, 122, 125, 127, 128, 129, 130, 131, 136, 137, 138, 142, 155, 157, 169, 173, 175,
        180, 182, 198, 202, 203, 205, 213, 217, 220, 222, 226, 227, 229, 232, 235, 244, 251, 252, 254, 257, 266,
        271, 278, 281, 282, 286, 289, 301, 309,
    ],
}


class IdentityFixture(BaseModel):
    """A printed relation: coefficient -> k-list, with the statistics it must satisfy."""

    id: int
    ks: dict[int, list[int]]
    expected_counts: dict[int, int]
    max_k: int
    hS: int = 92

    @model_validator(mode='after')
    def _transcription(self):
        counts = {c: len(ks) for c, ks in self.ks.items()}
        if counts != self.expected_counts:
            raise ValueError(f"identity {self.id}: term counts {counts} != {self.expected_counts}")
        all_ks = [k for ks in self.ks.values() for k in ks]
        if len(set(all_ks)) != len(all_ks):
            raise ValueError(f"identity {self.id}: a k appears twice")
        if max(all_ks) != self.max_k:
            raise ValueError(f"identity {self.id}: max k {max(all_ks)} != {self.max_k}")
        return self

    @property
    def terms(self):
        return sorted((d_of(k), c) for c, ks in self.ks.items() for k in ks)

    @property
    def term_count(self):
        return sum(self.expected_counts.values())

    @property
    def max_D(self):
        return d_of(self.max_k)

    def discriminant_set(self):
        return DiscriminantSet.of([D for D, _ in self.terms])

    def relation(self):
        return RelationVector.from_terms(self.discriminant_set(), self.terms)


IDENTITY_1 = IdentityFixture(id=1, ks=IDENTITY_1_KS, expected_counts={2: 131}, max_k=309)
IDENTITY_2 = IdentityFixture(id=2, ks=IDENTITY_2_KS, expected_counts={1: 66, 2: 55, 3: 77}, max_k=312)
IDENTITIES = {1: IDENTITY_1, 2: IDENTITY_2}
