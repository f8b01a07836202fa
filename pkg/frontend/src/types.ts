// Shapes of the service's JSON responses. The UI renders these verbatim;
// it never derives its own scores or rankings.

export interface SolutionSummary {
  method_id: string;
  display_name: string;
  origin: string;
  parameters: Record<string, unknown>;
  source_platform: string;
  target_platform: string;
  prec_at_1: number | null;
  mrr: number | null;
  n_evaluated: number;
}

export interface SolutionsResponse {
  schema_version: number;
  solutions: SolutionSummary[];
}

export interface IdentitySummary {
  platform: string;
  user_id: string;
  username: string;
  screen_name: string | null;
}

export interface SearchResponse {
  schema_version: number;
  identities: IdentitySummary[];
}

export interface IdentityRef {
  platform: string;
  user_id: string;
}

export interface Profile {
  platform: string;
  user_id: string;
  username: string;
  screen_name: string | null;
  bio: string | null;
  profile_image_ref: string | null;
  has_image: boolean;
}

export type CloudTerm = { term: string; count: number };

export interface EgoNode {
  ref: IdentityRef;
  username: string;
  screen_name: string | null;
  bio: string | null;
  degree: number;
  position: number;
}

export interface EgoView {
  ego: IdentityRef;
  directed: boolean;
  nodes: EgoNode[];
  edges: [number, number][];
  linked_highlight: number[];
  counterpart_of: Record<string, IdentityRef>;
}

export interface CandidateTab {
  rank: number;
  score: number;
  target: Profile;
  target_cloud: CloudTerm[];
  target_ego: EgoView;
  source_ego: EgoView;
}

export interface PairViewResponse {
  schema_version: number;
  method_id: string;
  source: Profile;
  source_cloud: CloudTerm[];
  tabs: CandidateTab[];
}

export interface DiffSource {
  source_id: string;
  username: string;
}

export interface DiffResponse {
  schema_version: number;
  method_a: string;
  method_b: string;
  criterion: string;
  sources: DiffSource[];
}
