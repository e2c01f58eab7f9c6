#!/usr/bin/env python3
"""Writes the bundled demo table: a nine-week course journal, seven entries a week."""
import argparse
import csv
import random

PROMPTS = [
    "Which tools did you use to find information this week?",
    "Describe a website you visited often and why.",
    "How do companies collect data about their users?",
    "What did you learn about online privacy?",
    "Compare two platforms you use for sharing code.",
    "Which social network did you use most and what for?",
    "How has searching the web changed your study habits?",
    "Reflect on a data story you read this week.",
    "What surprised you most in this course?",
]

STUDENTS = ["Alice", "Maria", "James", "Sarah", "David", "Linda", "Kevin"]
PLACES = ["Seattle", "Boston", "London", "Texas", "California"]

GOOGLE = [
    "I used Google to search for articles about {topic}.",
    "Google gave me quick answers and Google Scholar helped with {topic}.",
    "Most of my searching happens on Google because it is fast.",
    "I checked Google Maps before the trip to {place}.",
]
SPIKES = {
    "microsoft": ["Microsoft released a new tool and Microsoft Teams replaced our chat.",
                  "Our group wrote the report together in Microsoft Word."],
    "github": ["We pushed the project to GitHub and reviewed changes on GitHub.",
               "GitHub issues helped our team track small bugs."],
    "myspace": ["My older cousin showed me MySpace pages from years ago.",
                "MySpace profiles looked noisy but personal."],
}
# week -> organization that spikes that week
SPIKE_WEEKS = {3: "microsoft", 5: "github", 6: "github", 8: "myspace"}

FILLER = [
    "The readings were {adj} and the discussion felt {adj}.",
    "I noticed that {topic} matters for every student.",
    "Our instructor explained {topic} with clear examples.",
    "{student} shared a story about living in {place}.",
    "I wrote notes and compared results with {student}.",
    "Privacy policies are long, confusing documents.",
    "Visualizing trends helped me understand the data.",
]
TOPICS = ["privacy", "search engines", "data collection", "advertising", "social media",
          "open source software", "cloud storage", "online research"]
ADJECTIVES = ["useful", "interesting", "difficult", "surprising", "helpful", "careful"]


def sentence(rng, template):
    return template.format(topic=rng.choice(TOPICS), adj=rng.choice(ADJECTIVES),
                           student=rng.choice(STUDENTS), place=rng.choice(PLACES))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", required=True)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["Week", "Course ID", "Course Name", "Prompt", "Response"])
        for week in range(1, 10):
            spike = SPIKE_WEEKS.get(week)
            for entry in range(7):
                parts = [sentence(rng, rng.choice(GOOGLE)) for _ in range(2)]
                if spike and entry < 5:
                    parts.append(rng.choice(SPIKES[spike]))
                parts += [sentence(rng, rng.choice(FILLER)) for _ in range(rng.randint(1, 3))]
                rng.shuffle(parts)
                w.writerow([week, "INFO-1" + str(100 + week % 2), "Information and Society",
                            PROMPTS[week - 1], " ".join(parts)])


if __name__ == "__main__":
    main()
