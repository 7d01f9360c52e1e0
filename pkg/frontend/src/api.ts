/**
 * Typed client for the grading service.
 *
 * Every response is validated against a strict key whitelist before it is
 * used. The service contract promises that no dependency information ever
 * reaches the client, and rejecting unexpected fields turns a silent leak
 * into a loud failure (the e2e suite relies on this).
 */

export interface ViewBlock {
    id: string;
    text: string;
}

export interface QuestionView {
    question_id: string;
    seed: string;
    prompt: string;
    blocks: ViewBlock[];
}

export interface QuestionListing {
    id: string;
    title: string;
}

export type GradeStatus = 'correct' | 'wrong_at_line' | 'incomplete';

export interface GradeDoc {
    status: GradeStatus;
    first_failure?: number;
    score: number;
    attempt_echo: string[];
}

export class ApiError extends Error {
    constructor(message: string, readonly status: number) {
        super(message);
        this.name = 'ApiError';
    }
}

export class PayloadLeakError extends Error {
    constructor(message: string) {
        super(message);
        this.name = 'PayloadLeakError';
    }
}

function assertOnlyKeys(
    value: unknown,
    allowed: readonly string[],
    context: string,
): Record<string, unknown> {
    if (typeof value !== 'object' || value === null || Array.isArray(value)) {
        throw new PayloadLeakError(`${context}: expected an object`);
    }
    for (const key of Object.keys(value)) {
        if (!allowed.includes(key)) {
            throw new PayloadLeakError(`${context}: unexpected field "${key}"`);
        }
    }
    return value as Record<string, unknown>;
}

function asString(value: unknown, context: string): string {
    if (typeof value !== 'string') {
        throw new PayloadLeakError(`${context}: expected a string`);
    }
    return value;
}

function parseView(data: unknown): QuestionView {
    const doc = assertOnlyKeys(data, ['question_id', 'seed', 'prompt', 'blocks'], 'question view');
    const rawBlocks = doc.blocks;
    if (!Array.isArray(rawBlocks)) {
        throw new PayloadLeakError('question view: "blocks" must be an array');
    }
    const blocks = rawBlocks.map((entry, i) => {
        const block = assertOnlyKeys(entry, ['id', 'text'], `block ${i}`);
        return { id: asString(block.id, 'block id'), text: asString(block.text, 'block text') };
    });
    return {
        question_id: asString(doc.question_id, 'question_id'),
        seed: asString(doc.seed, 'seed'),
        prompt: asString(doc.prompt, 'prompt'),
        blocks,
    };
}

function parseGrade(data: unknown): GradeDoc {
    const doc = assertOnlyKeys(
        data,
        ['status', 'first_failure', 'score', 'attempt_echo'],
        'grade outcome',
    );
    const status = asString(doc.status, 'status');
    if (status !== 'correct' && status !== 'wrong_at_line' && status !== 'incomplete') {
        throw new PayloadLeakError(`grade outcome: unknown status "${status}"`);
    }
    if (typeof doc.score !== 'number') {
        throw new PayloadLeakError('grade outcome: "score" must be a number');
    }
    const echo = Array.isArray(doc.attempt_echo)
        ? doc.attempt_echo.map((x, i) => asString(x, `attempt_echo[${i}]`))
        : [];
    const outcome: GradeDoc = { status, score: doc.score, attempt_echo: echo };
    if (doc.first_failure !== undefined && doc.first_failure !== null) {
        if (typeof doc.first_failure !== 'number') {
            throw new PayloadLeakError('grade outcome: "first_failure" must be a number');
        }
        outcome.first_failure = doc.first_failure;
    }
    return outcome;
}

export class ApiClient {
    constructor(
        private readonly baseUrl: string = '',
        private readonly fetchImpl: typeof fetch = (...args) => fetch(...args),
    ) {}

    private async request(path: string, init?: RequestInit): Promise<unknown> {
        const response = await this.fetchImpl(this.baseUrl + path, init);
        if (!response.ok) {
            let detail = response.statusText;
            try {
                const body = (await response.json()) as { detail?: string };
                if (body && typeof body.detail === 'string') detail = body.detail;
            } catch {
                // non-JSON error body; keep the status text
            }
            throw new ApiError(detail, response.status);
        }
        return response.json();
    }

    async listQuestions(): Promise<QuestionListing[]> {
        const data = await this.request('/api/questions');
        if (!Array.isArray(data)) {
            throw new PayloadLeakError('question list: expected an array');
        }
        return data.map((entry, i) => {
            const doc = assertOnlyKeys(entry, ['id', 'title'], `listing ${i}`);
            return { id: asString(doc.id, 'id'), title: asString(doc.title, 'title') };
        });
    }

    async getQuestion(id: string, seed?: string): Promise<QuestionView> {
        const query = seed === undefined ? '' : `?seed=${encodeURIComponent(seed)}`;
        return parseView(await this.request(`/api/questions/${encodeURIComponent(id)}${query}`));
    }

    async grade(id: string, seed: string, ordering: string[]): Promise<GradeDoc> {
        const data = await this.request(`/api/questions/${encodeURIComponent(id)}/grade`, {
            method: 'POST',
            headers: { 'Content-Type': 'application/json' },
            body: JSON.stringify({ seed, ordering }),
        });
        return parseGrade(data);
    }
}
