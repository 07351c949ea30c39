#include "verbfill/model.hpp"

namespace verbfill {

int Sentence::last_non_punct_index() const {
  for (int i = static_cast<int>(tokens.size()) - 1; i >= 0; --i) {
    if (tokens[i].pos != Pos::Punct) return i;
  }
  return -1;
}

int Sentence::end_verb_index() const {
  const int i = last_non_punct_index();
  if (i >= 0 && tokens[i].is_predicate()) return i;
  return -1;
}

int Sentence::last_verb_index() const {
  for (int i = static_cast<int>(tokens.size()) - 1; i >= 0; --i) {
    if (tokens[i].is_predicate()) return i;
  }
  return -1;
}

const char* to_string(Pos pos) {
  switch (pos) {
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Aux: return "aux";
    case Pos::Particle: return "particle";
    case Pos::Adverb: return "adverb";
    case Pos::Pronoun: return "pronoun";
    case Pos::Punct: return "punct";
    case Pos::Other: return "other";
  }
  return "other";
}

const char* to_string(ParticleRole role) {
  switch (role) {
    case ParticleRole::Ga: return "ga";
    case ParticleRole::Wo: return "wo";
    case ParticleRole::Ni: return "ni";
    case ParticleRole::De: return "de";
    case ParticleRole::To: return "to";
    case ParticleRole::Wa: return "wa";
    case ParticleRole::Mo: return "mo";
    case ParticleRole::No: return "no";
    case ParticleRole::Other: return "other";
  }
  return "other";
}

const char* to_string(ConjForm form) {
  return form == ConjForm::Terminal ? "terminal" : "other";
}

const char* to_string(Category category) {
  switch (category) {
    case Category::NoEllipsis: return "no_ellipsis";
    case Category::QuestionAnswer: return "question_answer";
    case Category::Supplement: return "supplement";
    case Category::Interrogative: return "interrogative";
    case Category::CommonSense: return "common_sense";
  }
  return "no_ellipsis";
}

const char* to_string(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::NoEllipsis: return "no_ellipsis";
    case CandidateKind::ContextVerb: return "context_verb";
    case CandidateKind::CorpusVerb: return "corpus_verb";
    case CandidateKind::Interrogative: return "interrogative";
  }
  return "no_ellipsis";
}

std::optional<Pos> pos_from_string(const std::string& s) {
  if (s == "noun") return Pos::Noun;
  if (s == "verb") return Pos::Verb;
  if (s == "aux") return Pos::Aux;
  if (s == "particle") return Pos::Particle;
  if (s == "adverb") return Pos::Adverb;
  if (s == "pronoun") return Pos::Pronoun;
  if (s == "punct") return Pos::Punct;
  if (s == "other") return Pos::Other;
  return std::nullopt;
}

std::optional<ParticleRole> particle_role_from_string(const std::string& s) {
  if (s == "ga") return ParticleRole::Ga;
  if (s == "wo") return ParticleRole::Wo;
  if (s == "ni") return ParticleRole::Ni;
  if (s == "de") return ParticleRole::De;
  if (s == "to") return ParticleRole::To;
  if (s == "wa") return ParticleRole::Wa;
  if (s == "mo") return ParticleRole::Mo;
  if (s == "no") return ParticleRole::No;
  if (s == "other") return ParticleRole::Other;
  return std::nullopt;
}

std::optional<ConjForm> conj_form_from_string(const std::string& s) {
  if (s == "terminal") return ConjForm::Terminal;
  if (s == "other") return ConjForm::Other;
  return std::nullopt;
}

std::optional<Category> category_from_string(const std::string& s) {
  if (s == "no_ellipsis") return Category::NoEllipsis;
  if (s == "question_answer") return Category::QuestionAnswer;
  if (s == "supplement") return Category::Supplement;
  if (s == "interrogative") return Category::Interrogative;
  if (s == "common_sense") return Category::CommonSense;
  return std::nullopt;
}

}  // namespace verbfill
