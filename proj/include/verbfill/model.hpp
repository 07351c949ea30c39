#ifndef VERBFILL_MODEL_HPP
#define VERBFILL_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

namespace verbfill {

enum class Pos { Noun, Verb, Aux, Particle, Adverb, Pronoun, Punct, Other };

enum class ParticleRole { Ga, Wo, Ni, De, To, Wa, Mo, No, Other };

enum class ConjForm { Terminal, Other };

struct Token {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::Other;
  std::optional<ParticleRole> particle_role;
  std::optional<ConjForm> conj_form;
  std::optional<int> head;  // index of the governing predicate token

  bool is_predicate() const { return pos == Pos::Verb || pos == Pos::Aux; }
};

struct Sentence {
  int id = 0;
  std::optional<std::string> speaker;
  std::string text;
  std::vector<Token> tokens;

  // Index of the last token that is not punctuation, -1 if none.
  int last_non_punct_index() const;
  // Index of the sentence-final verb: the last non-punct token iff it is a
  // verb or aux, -1 otherwise. A noun-final sentence has no end verb.
  int end_verb_index() const;
  // Index of the last verb/aux token anywhere in the sentence, -1 if none.
  int last_verb_index() const;
};

struct Document {
  std::string doc_id;
  std::vector<Sentence> sentences;
};

enum class Category {
  NoEllipsis,
  QuestionAnswer,
  Supplement,
  Interrogative,
  CommonSense,
};

enum class CandidateKind { NoEllipsis, ContextVerb, CorpusVerb, Interrogative };

// Identity of a possible recovered verb. ContextVerb points at a token in an
// earlier sentence; CorpusVerb carries the recovered latter-part string.
struct Candidate {
  CandidateKind kind = CandidateKind::NoEllipsis;
  int sentence_id = 0;   // ContextVerb only
  int token_index = 0;   // ContextVerb only
  std::string verb;      // CorpusVerb only

  static Candidate no_ellipsis() { return {}; }
  static Candidate context_verb(int sentence_id, int token_index) {
    Candidate c;
    c.kind = CandidateKind::ContextVerb;
    c.sentence_id = sentence_id;
    c.token_index = token_index;
    return c;
  }
  static Candidate corpus_verb(std::string verb) {
    Candidate c;
    c.kind = CandidateKind::CorpusVerb;
    c.verb = std::move(verb);
    return c;
  }
  static Candidate interrogative() {
    Candidate c;
    c.kind = CandidateKind::Interrogative;
    return c;
  }

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// (Possible recovered verb, Point), tagged with the rule that emitted it.
struct Proposal {
  Candidate candidate;
  double point = 0.0;
  int rule_id = 0;  // 1..7

  friend bool operator==(const Proposal&, const Proposal&) = default;
};

struct ScoredCandidate {
  Candidate candidate;
  double total = 0.0;
  std::vector<Proposal> contributors;
};

// Per-sentence verdict with the full score table.
struct Resolution {
  int sentence_id = 0;
  bool has_ellipsis = false;
  Category category = Category::NoEllipsis;
  std::optional<Candidate> recovered;
  // Lemma used by the evaluation harness. ContextVerb: the referenced
  // token's lemma; CorpusVerb: the trimmed string (no lemmatizer in scope).
  std::optional<std::string> recovered_lemma;
  double total_score = 0.0;
  std::vector<ScoredCandidate> breakdown;
};

const char* to_string(Pos pos);
const char* to_string(ParticleRole role);
const char* to_string(ConjForm form);
const char* to_string(Category category);
const char* to_string(CandidateKind kind);

std::optional<Pos> pos_from_string(const std::string& s);
std::optional<ParticleRole> particle_role_from_string(const std::string& s);
std::optional<ConjForm> conj_form_from_string(const std::string& s);
std::optional<Category> category_from_string(const std::string& s);

}  // namespace verbfill

#endif  // VERBFILL_MODEL_HPP
