# Copyright 2026 The Data Mystery Authors
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

"""Writes the bundled knowledge fixtures.

The fixtures are small, hand-curated graph snapshots. Characteristic values
that are not curated below are filled in from a seeded generator so that
re-running the script reproduces the files byte for byte.
"""

import argparse
import json
import pathlib
import random

PLACEHOLDERS = {
    "male": ["portrait-male-1.png", "portrait-male-2.png"],
    "female": ["portrait-female-1.png", "portrait-female-2.png"],
    "neutral": ["portrait-neutral.png"],
}


class Fixture:
    def __init__(self, seed):
        self.rng = random.Random(seed)
        self.entities = {}
        self.links = []

    def add(self, iri, label, kind, **fields):
        entity = {"iri": iri, "label": label, "kind": kind}
        entity.update({k: v for k, v in fields.items() if v is not None})
        self.entities[iri] = entity
        return iri

    def city(self, iri, label, lat, lon, abstract):
        return self.add(iri, label, "place", lat=lat, lon=lon,
                        abstract=abstract)

    def building(self, iri, label, city, abstract):
        self.add(iri, label, "place", abstract=abstract)
        self.link(iri, city, "location")
        return iri

    def thing(self, iri, label, abstract, images=None):
        return self.add(iri, label, "other", abstract=abstract, images=images)

    def link(self, src, dst, predicate):
        self.links.append({"from": src, "to": dst, "predicate": predicate})

    def person(self, iri, label, gender, traits, links, abstract=None,
               images=None):
        characteristics = {k: sorted(set(v)) for k, v in traits.items() if v}
        self.add(iri, label, "person", gender=gender,
                 characteristics=characteristics, abstract=abstract,
                 images=images)
        for predicate, target in links:
            self.link(iri, target, predicate)
        return iri

    def dump(self):
        links = sorted({json.dumps(l, sort_keys=True) for l in self.links})
        return {
            "version": 1,
            "entities": [self.entities[k] for k in sorted(self.entities)],
            "links": [json.loads(l) for l in links],
            "placeholders": PLACEHOLDERS,
        }


def birth_date(rng, year):
    return "%04d-%02d-%02d" % (year, rng.randint(1, 12), rng.randint(1, 28))


def filler_person(fx, iri, label, gender, born, died, home, school, field,
                  nationality, extra_links, award=None, known_for=None,
                  residence=None, abstract=None):
    """A person whose dates and places are partly drawn from the rng."""
    traits = {
        "birthDate": [birth_date(fx.rng, born)],
        "birthYear": [str(born)],
        "birthPlace": [fx.entities[home]["label"]],
        "field": field,
        "nationality": nationality,
        "almaMater": [fx.entities[school]["label"]] if school else [],
    }
    if died:
        traits["deathYear"] = [str(died)]
    if residence:
        traits["residence"] = [fx.entities[residence]["label"]]
    if award:
        traits["award"] = [fx.entities[award]["label"]]
    if known_for:
        traits["knownFor"] = [fx.entities[known_for]["label"]]
    links = [("birthPlace", home)]
    if school:
        links.append(("almaMater", school))
    if residence:
        links.append(("residence", residence))
    if award:
        links.append(("award", award))
    if known_for:
        links.append(("knownFor", known_for))
    links.extend(extra_links)
    if abstract is None:
        abstract = "%s was a %s %s." % (
            label, nationality[0], field[0].lower() + " scholar")
    return fx.person(iri, label, gender, traits, links, abstract=abstract)


def einstein():
    fx = Fixture(1879)
    c = {}
    for key, label, lat, lon in [
        ("ulm", "Ulm", 48.40, 9.99),
        ("bern", "Bern", 46.95, 7.45),
        ("zurich", "Zurich", 47.37, 8.54),
        ("berlin", "Berlin", 52.52, 13.40),
        ("princeton", "Princeton", 40.35, -74.66),
        ("prague", "Prague", 50.08, 14.44),
        ("vienna", "Vienna", 48.21, 16.37),
        ("leiden", "Leiden", 52.16, 4.49),
        ("copenhagen", "Copenhagen", 55.68, 12.57),
        ("cambridge", "Cambridge", 52.21, 0.12),
        ("glasgow", "Glasgow", 55.86, -4.25),
        ("edinburgh", "Edinburgh", 55.95, -3.19),
        ("munich", "Munich", 48.14, 11.58),
        ("gottingen", "Gottingen", 51.54, 9.93),
        ("newyork", "New York City", 40.71, -74.01),
        ("pasadena", "Pasadena", 34.15, -118.14),
        ("jerusalem", "Jerusalem", 31.77, 35.21),
        ("milan", "Milan", 45.46, 9.19),
        ("london", "London", 51.51, -0.13),
        ("canada", "Canada", 56.13, -106.35),
    ]:
        c[key] = fx.city("pl:" + key, label, lat, lon,
                         "%s is a place on the map. It has a long history."
                         % label)
    b = {}
    for key, label, city in [
        ("eth", "ETH Zurich", "zurich"),
        ("patent", "Swiss Patent Office", "bern"),
        ("ias", "Institute for Advanced Study", "princeton"),
        ("prussian", "Prussian Academy of Sciences", "berlin"),
        ("humboldt", "University of Berlin", "berlin"),
        ("charles", "Charles University", "prague"),
        ("leidenu", "Leiden University", "leiden"),
        ("bohr", "Niels Bohr Institute", "copenhagen"),
        ("trinity", "Trinity College", "cambridge"),
        ("glasgowu", "University of Glasgow", "glasgow"),
        ("caltech", "California Institute of Technology", "pasadena"),
        ("hebrew", "Hebrew University of Jerusalem", "jerusalem"),
        ("royal", "Royal Society", "london"),
        ("munichu", "University of Munich", "munich"),
        ("mcgill", "McGill University", "canada"),
    ]:
        b[key] = fx.building("org:" + key, label, c[city],
                             "%s is an institution in %s." %
                             (label, fx.entities[c[city]]["label"]))
    t = {}
    for key, label, abstract in [
        ("relativity", "Theory of relativity",
         "The theory of relativity describes space and time. It was a major "
         "change in physics."),
        ("photo", "Photoelectric effect",
         "The photoelectric effect is the emission of electrons when light "
         "hits a material."),
        ("nobel", "Nobel Prize in Physics",
         "The Nobel Prize in Physics is a yearly award for physics."),
        ("copley", "Copley Medal",
         "The Copley Medal is a scientific award given by the Royal Society."),
        ("frs", "Fellow of the Royal Society",
         "Fellowship of the Royal Society is granted to eminent scientists."),
        ("annalen", "Annalen der Physik",
         "Annalen der Physik is a scientific journal on physics."),
        ("epr", "EPR paradox",
         "The EPR paradox is a thought experiment about quantum mechanics."),
        ("thermo", "Thermodynamics",
         "Thermodynamics is the study of heat and work."),
        ("bec", "Bose-Einstein condensate",
         "A Bose-Einstein condensate is a state of matter at very low "
         "temperature."),
        ("jews", "Jews",
         "Jews are an ethnoreligious group. This text is a category page."),
        ("emigres", "German emigrants to the United States",
         "This category lists people who moved from Germany to the United "
         "States."),
        ("pacifism", "Pacifism",
         "Pacifism is opposition to war and violence."),
    ]:
        t[key] = fx.thing("thing:" + key, label, abstract)

    p = {}
    p["einstein"] = fx.person(
        "p:einstein", "Albert Einstein", "male",
        {
            "field": ["Physics", "Philosophy"],
            "birthDate": ["1879-03-14"],
            "birthYear": ["1879"],
            "birthPlace": ["Ulm"],
            "deathYear": ["1955"],
            "nationality": ["German", "Swiss", "American"],
            "almaMater": ["ETH Zurich"],
            "residence": ["Princeton"],
            "award": ["Nobel Prize in Physics", "Copley Medal"],
            "knownFor": ["Theory of relativity", "Photoelectric effect"],
        },
        [("birthPlace", c["ulm"]), ("almaMater", b["eth"]),
         ("residence", c["princeton"]), ("employer", b["patent"]),
         ("employer", b["ias"]), ("employer", b["prussian"]),
         ("award", t["nobel"]), ("award", t["copley"]),
         ("knownFor", t["relativity"]), ("knownFor", t["photo"]),
         ("knownFor", t["bec"]), ("subject", t["jews"]),
         ("subject", t["emigres"]), ("subject", t["pacifism"])],
        abstract="Albert Einstein was a theoretical physicist. He developed "
                 "the theory of relativity.",
        images=["einstein.jpg"])

    spec = [
        # iri, label, gender, born, died, home, school, field, nationality,
        # extra links, award, knownFor, residence
        ("maric", "Mileva Maric", "female", 1875, 1948, "zurich", "eth",
         ["Physics", "Mathematics"], ["Serbian", "Swiss"],
         [("spouse", "einstein")], None, None, "zurich"),
        ("grossmann", "Marcel Grossmann", "male", 1878, 1936, "zurich", "eth",
         ["Mathematics"], ["Swiss"], [("colleague", "einstein")],
         None, "relativity", "zurich"),
        ("besso", "Michele Besso", "male", 1873, 1955, "zurich", "eth",
         ["Engineering"], ["Swiss", "Italian"],
         [("colleague", "einstein"), ("employer", "patent")],
         None, None, "bern"),
        ("planck", "Max Planck", "male", 1858, 1947, "munich", "munichu",
         ["Physics"], ["German"], [("influenced", "einstein"),
                                   ("employer", "prussian")],
         "nobel", "thermo", "berlin"),
        ("bohr", "Niels Bohr", "male", 1885, 1962, "copenhagen", "bohr",
         ["Physics"], ["Danish"], [("colleague", "einstein")],
         "nobel", None, "copenhagen"),
        ("minkowski", "Hermann Minkowski", "male", 1864, 1909, "gottingen",
         "eth", ["Mathematics"], ["German"], [("doctoralAdvisor", "grossmann"),
                                             ("influenced", "einstein")],
         None, "relativity", "gottingen"),
        ("rosen", "Nathan Rosen", "male", 1909, 1995, "newyork", "ias",
         ["Physics"], ["American", "Israeli"],
         [("colleague", "einstein"), ("subject", "jews")],
         None, "epr", "jerusalem"),
        ("podolsky", "Boris Podolsky", "male", 1896, 1966, "newyork", "caltech",
         ["Physics"], ["American"], [("colleague", "einstein")],
         None, "epr", "newyork"),
        ("szilard", "Leo Szilard", "male", 1898, 1964, "vienna", "humboldt",
         ["Physics", "Biology"], ["Hungarian", "American"],
         [("colleague", "einstein"), ("subject", "emigres")],
         None, None, "newyork"),
        ("godel", "Kurt Godel", "male", 1906, 1978, "vienna", None,
         ["Mathematics", "Philosophy"], ["Austrian", "American"],
         [("colleague", "einstein"), ("employer", "ias")],
         None, None, "princeton"),
        ("born", "Max Born", "male", 1882, 1970, "gottingen", "gottingen",
         ["Physics"], ["German", "British"], [("colleague", "einstein")],
         "nobel", None, "edinburgh"),
        ("ehrenfest", "Paul Ehrenfest", "male", 1880, 1933, "vienna", "leidenu",
         ["Physics"], ["Austrian", "Dutch"], [("colleague", "einstein")],
         None, "thermo", "leiden"),
        ("lorentz", "Hendrik Lorentz", "male", 1853, 1928, "leiden", "leidenu",
         ["Physics"], ["Dutch"], [("influenced", "einstein")],
         "nobel", "relativity", "leiden"),
        ("schrodinger", "Erwin Schrodinger", "male", 1887, 1961, "vienna",
         "charles", ["Physics"], ["Austrian"], [("colleague", "einstein")],
         "nobel", None, "vienna"),
        ("sommerfeld", "Arnold Sommerfeld", "male", 1868, 1951, "gottingen",
         "munichu", ["Physics"], ["German"], [("doctoralAdvisor", "born")],
         None, None, "munich"),
        ("frank", "Philipp Frank", "male", 1884, 1966, "vienna", "charles",
         ["Physics", "Philosophy"], ["Austrian", "American"],
         [("influenced", "einstein")], None, None, "prague"),
        ("infeld", "Leopold Infeld", "male", 1898, 1968, "prague", "charles",
         ["Physics"], ["Polish"], [("colleague", "einstein")],
         None, None, "canada"),
        ("hoffmann", "Banesh Hoffmann", "male", 1906, 1986, "london", "ias",
         ["Mathematics", "Physics"], ["British", "American"],
         [("colleague", "einstein")], None, None, "newyork"),
        ("oppenheimer", "Robert Oppenheimer", "male", 1904, 1967, "newyork",
         "caltech", ["Physics"], ["American"], [("employer", "ias")],
         None, None, "princeton"),
        ("wheeler", "John Wheeler", "male", 1911, 2008, "newyork", "ias",
         ["Physics"], ["American"], [("influenced", "rosen")],
         None, None, "princeton"),
        ("meitner", "Lise Meitner", "female", 1878, 1968, "vienna", "humboldt",
         ["Physics"], ["Austrian", "Swedish"], [("colleague", "planck")],
         "copley", None, "cambridge"),
        ("haber", "Fritz Haber", "male", 1868, 1934, "berlin", "humboldt",
         ["Chemistry"], ["German"], [("colleague", "einstein")],
         "nobel", None, "berlin"),
        ("stern", "Otto Stern", "male", 1888, 1969, "prague", "charles",
         ["Physics"], ["German", "American"], [("colleague", "einstein")],
         "nobel", None, "pasadena"),
        ("weizmann", "Chaim Weizmann", "male", 1874, 1952, "jerusalem",
         "humboldt", ["Chemistry"], ["Israeli", "British"],
         [("colleague", "einstein"), ("employer", "hebrew")],
         None, None, "jerusalem"),
        ("shenstone", "Allen Shenstone", "male", 1893, 1980, "canada",
         "mcgill", ["Physics"], ["Canadian"], [("subject", "jews")],
         None, None, "princeton"),
        ("rankine", "William John Macquorn Rankine", "male", 1820, 1872,
         "edinburgh", "glasgowu", ["Engineering", "Physics"], ["Scottish"],
         [("influenced", "planck")], None, "thermo", "glasgow"),
        ("meisenheimer", "Jakob Meisenheimer", "male", 1876, 1934, "munich",
         "munichu", ["Chemistry"], ["German"], [("colleague", "haber")],
         None, None, "munich"),
        ("beddington", "Rosa Beddington", "female", 1956, 2001, "london",
         "trinity", ["Biology"], ["British"], [("award", "frs")],
         "frs", None, "london"),
        ("mackay", "David MacKay", "male", 1967, 2016, "cambridge", "trinity",
         ["Physics", "Engineering"], ["British"], [("award", "frs")],
         "frs", None, "cambridge"),
        ("hilbert", "David Hilbert", "male", 1862, 1943, "gottingen",
         "gottingen", ["Mathematics"], ["German"],
         [("influenced", "einstein")], None, "relativity", "gottingen"),
        ("noether", "Emmy Noether", "female", 1882, 1935, "munich",
         "gottingen", ["Mathematics"], ["German"], [("colleague", "hilbert")],
         None, None, "princeton"),
        ("bose", "Satyendra Nath Bose", "male", 1894, 1974, "london", None,
         ["Physics"], ["Indian"], [("colleague", "einstein")],
         "frs", "bec", "london"),
        ("chaplin", "Charlie Chaplin", "male", 1889, 1977, "london", None,
         ["Film"], ["British"], [("subject", "pacifism")],
         None, None, "london"),
        ("elsa", "Elsa Einstein", "female", 1876, 1936, "munich", None,
         ["Literature"], ["German", "American"],
         [("spouse", "einstein"), ("subject", "emigres")],
         None, None, "princeton"),
    ]
    b["gottingen"] = fx.building("org:gottingen", "University of Gottingen",
                                 c["gottingen"],
                                 "The University of Gottingen is a university "
                                 "in Gottingen.")
    for row in spec:
        (key, label, gender, born, died, home, school, field, nationality,
         extra, award, known, residence) = row
        links = []
        for predicate, target in extra:
            if target in p or target in ("einstein",):
                links.append((predicate, p[target]))
            elif target in b:
                links.append((predicate, b[target]))
            elif target in t:
                links.append((predicate, t[target]))
            else:
                raise KeyError(target)
        p[key] = "p:" + key
        filler_person(
            fx, p[key], label, gender, born, died, c[home],
            b[school] if school else None, field, nationality, links,
            award=t[award] if award else None,
            known_for=t[known] if known else None,
            residence=c[residence] if residence else None)
    fx.entities["p:einstein"]["images"] = ["einstein.jpg"]
    fx.entities["p:bohr"]["images"] = ["bohr.jpg"]
    fx.entities["p:planck"]["images"] = ["planck.jpg"]
    return fx.dump()


def gandhi():
    fx = Fixture(1869)
    c = {}
    for key, label, lat, lon in [
        ("porbandar", "Porbandar", 21.64, 69.60),
        ("ahmedabad", "Ahmedabad", 23.02, 72.57),
        ("london", "London", 51.51, -0.13),
        ("durban", "Durban", -29.86, 31.02),
        ("johannesburg", "Johannesburg", -26.20, 28.05),
        ("delhi", "New Delhi", 28.61, 77.21),
        ("mumbai", "Mumbai", 19.08, 72.88),
        ("losangeles", "Los Angeles", 34.05, -118.24),
        ("dallas", "Dallas", 32.78, -96.80),
        ("beardstown", "Beardstown", 40.02, -90.42),
        ("vienna", "Vienna", 48.21, 16.37),
        ("chicago", "Chicago", 41.88, -87.63),
        ("allahabad", "Allahabad", 25.44, 81.85),
        ("kolkata", "Kolkata", 22.57, 88.36),
        ("newyork", "New York City", 40.71, -74.01),
    ]:
        c[key] = fx.city("pl:" + key, label, lat, lon,
                         "%s is a place on the map. Many people live there."
                         % label)
    b = {}
    for key, label, city in [
        ("ucl", "University College London", "london"),
        ("innertemple", "Inner Temple", "london"),
        ("sabarmati", "Sabarmati Ashram", "ahmedabad"),
        ("phoenix", "Phoenix Settlement", "durban"),
        ("tolstoy", "Tolstoy Farm", "johannesburg"),
        ("warner", "Warner Bros. Cartoons", "losangeles"),
        ("mgm", "MGM Cartoon Studio", "losangeles"),
        ("universal", "Universal Studios", "losangeles"),
        ("vienna_u", "University of Vienna", "vienna"),
        ("chicago_u", "University of Chicago", "chicago"),
        ("allahabad_hc", "Allahabad High Court", "allahabad"),
        ("congress", "Indian National Congress", "delhi"),
    ]:
        b[key] = fx.building("org:" + key, label, c[city],
                             "%s is an institution in %s." %
                             (label, fx.entities[c[city]]["label"]))
    t = {}
    for key, label, abstract in [
        ("videoclips", "Articles containing video clips",
         "This category lists articles that contain video clips."),
        ("lawyers", "Indian lawyers",
         "This category lists lawyers from India."),
        ("philosophers", "20th-century philosophers",
         "This category lists philosophers of the twentieth century."),
        ("satyagraha", "Satyagraha",
         "Satyagraha is a form of nonviolent resistance."),
        ("saltmarch", "Salt March",
         "The Salt March was a nonviolent protest against the salt tax."),
        ("animation", "Animation",
         "Animation is a method of making pictures appear to move."),
        ("silentfilm", "Silent film", "A silent film has no spoken dialogue."),
        ("buddhism", "Buddhism", "Buddhism is a religion and philosophy."),
        ("plato", "Platonism", "Platonism is the philosophy of Plato."),
        ("bharatratna", "Bharat Ratna",
         "The Bharat Ratna is the highest civilian award of India."),
        ("oscar", "Academy Award", "The Academy Awards honour film."),
    ]:
        t[key] = fx.thing("thing:" + key, label, abstract)

    p = {"gandhi": "p:gandhi"}
    fx.person(
        "p:gandhi", "Mahatma Gandhi", "male",
        {
            "field": ["Law", "Philosophy"],
            "birthDate": ["1869-10-02"],
            "birthYear": ["1869"],
            "birthPlace": ["Porbandar"],
            "deathYear": ["1948"],
            "nationality": ["Indian"],
            "occupation": ["Lawyer", "Philosopher"],
            "almaMater": ["University College London"],
            "residence": ["Ahmedabad"],
            "knownFor": ["Satyagraha"],
        },
        [("birthPlace", c["porbandar"]), ("almaMater", b["ucl"]),
         ("almaMater", b["innertemple"]), ("residence", c["ahmedabad"]),
         ("residence", b["sabarmati"]), ("knownFor", t["satyagraha"]),
         ("knownFor", t["saltmarch"]), ("subject", t["videoclips"]),
         ("subject", t["lawyers"]), ("subject", t["philosophers"]),
         ("employer", b["congress"])],
        abstract="Mahatma Gandhi was an Indian lawyer and leader. He led a "
                 "nonviolent campaign for independence.",
        images=["gandhi.jpg"])

    spec = [
        ("lyons", "Eddie Lyons", "male", 1886, 1926, "beardstown", None,
         ["Film"], ["American"], [("subject", "videoclips"),
                                  ("employer", "universal")],
         None, "silentfilm", "losangeles", ["Actor", "Director"]),
        ("avery", "Tex Avery", "male", 1908, 1980, "dallas", None,
         ["Animation"], ["American"], [("subject", "videoclips"),
                                       ("employer", "warner"),
                                       ("employer", "mgm")],
         None, "animation", "losangeles", ["Animator", "Director"]),
        ("verma", "Jhunnilal Verma", "male", 1897, 1980, "allahabad", None,
         ["Law"], ["Indian"], [("subject", "lawyers"),
                               ("employer", "allahabad_hc")],
         None, None, "allahabad", ["Lawyer", "Politician"]),
        ("zotz", "Volker Zotz", "male", 1956, None, "vienna", "vienna_u",
         ["Philosophy"], ["Austrian"], [("subject", "philosophers")],
         None, "buddhism", "vienna", ["Philosopher", "Writer"]),
        ("srosen", "Stanley Rosen", "male", 1929, 2014, "chicago",
         "chicago_u", ["Philosophy"], ["American"],
         [("subject", "philosophers")], None, "plato", "newyork",
         ["Philosopher"]),
        ("kasturba", "Kasturba Gandhi", "female", 1869, 1944, "porbandar",
         None, ["Politics"], ["Indian"], [("spouse", "gandhi")],
         None, None, "ahmedabad", ["Activist"]),
        ("nehru", "Jawaharlal Nehru", "male", 1889, 1964, "allahabad",
         "innertemple", ["Law", "Politics"], ["Indian"],
         [("colleague", "gandhi"), ("employer", "congress")],
         "bharatratna", None, "delhi", ["Lawyer", "Politician"]),
        ("patel", "Vallabhbhai Patel", "male", 1875, 1950, "ahmedabad",
         "innertemple", ["Law", "Politics"], ["Indian"],
         [("colleague", "gandhi"), ("subject", "lawyers")],
         "bharatratna", "saltmarch", "ahmedabad", ["Lawyer", "Politician"]),
        ("tagore", "Rabindranath Tagore", "male", 1861, 1941, "kolkata", "ucl",
         ["Literature", "Philosophy"], ["Indian"],
         [("influenced", "gandhi"), ("subject", "philosophers")],
         None, None, "kolkata", ["Poet", "Philosopher"]),
        ("kallenbach", "Hermann Kallenbach", "male", 1871, 1945,
         "johannesburg", None, ["Architecture"], ["South African"],
         [("colleague", "gandhi"), ("employer", "tolstoy")],
         None, None, "johannesburg", ["Architect"]),
        ("polak", "Henry Polak", "male", 1882, 1959, "london", None,
         ["Law"], ["British"], [("colleague", "gandhi"),
                                ("employer", "phoenix")],
         None, None, "london", ["Lawyer", "Writer"]),
        ("naidu", "Sarojini Naidu", "female", 1879, 1949, "kolkata", None,
         ["Literature", "Politics"], ["Indian"],
         [("colleague", "gandhi"), ("employer", "congress")],
         None, "saltmarch", "mumbai", ["Poet", "Politician"]),
        ("chaplin", "Charlie Chaplin", "male", 1889, 1977, "london", None,
         ["Film"], ["British"], [("subject", "videoclips"),
                                 ("colleague", "gandhi")],
         "oscar", "silentfilm", "losangeles", ["Actor", "Director"]),
        ("hanna", "William Hanna", "male", 1910, 2001, "chicago", None,
         ["Animation"], ["American"], [("employer", "mgm"),
                                       ("colleague", "avery")],
         "oscar", "animation", "losangeles", ["Animator"]),
        ("jones", "Chuck Jones", "male", 1912, 2002, "dallas", None,
         ["Animation"], ["American"], [("employer", "warner"),
                                       ("colleague", "avery")],
         "oscar", "animation", "losangeles", ["Animator", "Director"]),
        ("ambedkar", "B. R. Ambedkar", "male", 1891, 1956, "mumbai",
         "vienna_u", ["Law", "Philosophy"], ["Indian"],
         [("subject", "lawyers"), ("subject", "philosophers")],
         "bharatratna", "buddhism", "delhi", ["Lawyer", "Economist"]),
        ("bose_s", "Subhas Chandra Bose", "male", 1897, 1945, "kolkata", None,
         ["Politics"], ["Indian"], [("colleague", "gandhi"),
                                    ("employer", "congress")],
         None, None, "kolkata", ["Politician"]),
    ]
    for row in spec:
        (key, label, gender, born, died, home, school, field, nationality,
         extra, award, known, residence, occupation) = row
        links = []
        for predicate, target in extra:
            if target in p:
                links.append((predicate, p[target]))
            elif target in b:
                links.append((predicate, b[target]))
            elif target in t:
                links.append((predicate, t[target]))
            else:
                raise KeyError(target)
        p[key] = "p:" + key
        filler_person(
            fx, p[key], label, gender, born, died, c[home],
            b[school] if school else None, field, nationality, links,
            award=t[award] if award else None,
            known_for=t[known] if known else None,
            residence=c[residence] if residence else None)
        fx.entities[p[key]]["characteristics"]["occupation"] = occupation
    return fx.dump()


def ga_unique():
    """Victim K, designed culprit C, innocents S1..S4 and decoys D1..D7.

    C holds "common" on c1..c4; S_i also holds a rare value on c_i. Every
    decoy lacks exactly one of c1..c4 and otherwise copies C, so no decoy
    can be cleared or act as culprit with four usable characteristics.
    Everybody shares "shared" on e1 and e2, which never clears anyone.
    """
    fx = Fixture(7)
    chars = ["c1", "c2", "c3", "c4"]
    fx.person("u:k", "Victim K", "unknown",
              {"e1": ["shared"], "e2": ["shared"]}, [])

    def row(rare=None, missing=None):
        traits = {"e1": ["shared"], "e2": ["shared"]}
        for i, ch in enumerate(chars):
            if i == missing:
                continue
            traits[ch] = ["common"] + ([rare] if rare and rare[1] == ch[1]
                                       else [])
        return traits

    fx.person("u:c", "Suspect C", "unknown", row(), [])
    for i in range(4):
        fx.person("u:s%d" % (i + 1), "Suspect S%d" % (i + 1), "unknown",
                  row(rare="r%d" % (i + 1)), [])
    for j in range(7):
        fx.person("u:d%d" % (j + 1), "Decoy D%d" % (j + 1), "unknown",
                  row(missing=j % 4), [])
    return fx.dump()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--root", default=str(pathlib.Path(__file__).parent
                                              .parent))
    args = parser.parse_args()
    root = pathlib.Path(args.root)
    outputs = {
        root / "fixtures" / "einstein-mini.json": einstein(),
        root / "fixtures" / "gandhi-mini.json": gandhi(),
        root / "tests" / "data" / "ga-unique.json": ga_unique(),
    }
    for path, doc in outputs.items():
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(doc, indent=2) + "\n")
        print("wrote %s (%d entities, %d links)" %
              (path, len(doc["entities"]), len(doc["links"])))


if __name__ == "__main__":
    main()
