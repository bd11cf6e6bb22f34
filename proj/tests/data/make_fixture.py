# Copyright 2026 The Collabnet Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the bundled synthetic corpus: fixture_publications.tsv and
fixture_seminars.csv. The outputs are checked in; rerun only to change them.
"""

import pathlib
import random

VENUES = ["algo", "db", "graphics", "ml", "net", "os", "pl", "theory"]
AUTHORS_PER_VENUE = 40
PUBLICATIONS = 1000
FIRST_YEAR, LAST_YEAR = 2000, 2009


def main():
    rng = random.Random(20260101)
    here = pathlib.Path(__file__).parent
    given = ["Anna", "Boris", "Chen", "Dana", "Emil", "Fatma", "Goran", "Hana",
             "Ivo", "Jun", "Kira", "Lars", "Mira", "Nils", "Olga", "Pavel"]
    family = ["Adler", "Berg", "Costa", "Dietz", "Ek", "Falk", "Gross",
              "Horn", "Ito", "Jung", "Kern", "Lund", "Moser", "Nagy", "Ortiz",
              "Park", "Quist", "Roth", "Sato", "Tal"]
    names = [f"{g} {f}" for f in family for g in given]
    rng.shuffle(names)
    community = {v: names[i * AUTHORS_PER_VENUE:(i + 1) * AUTHORS_PER_VENUE]
                 for i, v in enumerate(VENUES)}
    everyone = names[:len(VENUES) * AUTHORS_PER_VENUE]

    rows = []
    for i in range(PUBLICATIONS):
        venue = rng.choice(VENUES)
        year = rng.randint(FIRST_YEAR, LAST_YEAR)
        k = rng.choice([1, 2, 2, 3, 3, 4])
        authors = rng.sample(community[venue], k)
        if rng.random() < 0.1:
            authors.append(rng.choice(everyone))
        authors = list(dict.fromkeys(authors))
        rows.append(f"{venue}/{year}/p{i:04d}\t{year}\t{venue}\t"
                    + "|".join(authors))
    # Two malformed lines exercise the diagnostics path.
    rows.insert(17, "broken/0001\tnot-a-year\tdb\tAnna Adler")
    rows.insert(503, "broken/0002\t2004\tdb")
    (here / "fixture_publications.tsv").write_text("\n".join(rows) + "\n")

    seminars = ["seminar_id,year,invitee,attended"]
    for s in range(12):
        year = 2002 + s // 2
        venue = VENUES[s % len(VENUES)]
        pool = community[venue] + rng.sample(everyone, 10)
        invitees = rng.sample(sorted(set(pool)), 18)
        invitees.append(f"Guest{s} Outside")  # Never publishes.
        for name in invitees:
            attended = 1 if rng.random() < 0.6 else 0
            seminars.append(f"S{s:02d},{year},{name},{attended}")
    (here / "fixture_seminars.csv").write_text("\n".join(seminars) + "\n")


if __name__ == "__main__":
    main()
