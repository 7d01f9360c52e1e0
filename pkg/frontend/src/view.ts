/**
 * DOM rendering for the board: two droppable zones, draggable blocks with
 * keyboard parity, a submit button, and the feedback banner. The whole
 * app is re-rendered on each state change; the board is small enough that
 * diffing would be pure ceremony.
 *
 * Every pointer interaction has a keyboard equivalent on the focused
 * block: Enter/Space moves it to the other zone, ArrowUp/ArrowDown
 * reorders it within its zone.
 */

import type { GradeDoc } from './api.js';
import type { Board, Zone } from './board.js';

export interface BoardCallbacks {
    onMove(id: string, zone: Zone, index: number): void;
    onNudge(id: string, delta: -1 | 1): void;
    onTransfer(id: string): void;
    onSubmit(): void;
}

export interface AppState {
    board: Board | null;
    busy: boolean;
    error: string | null;
    focusId: string | null;
}

const ZONE_TITLES: Record<Zone, string> = {
    starting: 'Drag from here',
    target: 'Construct your proof here',
};

function feedbackBanner(outcome: GradeDoc): HTMLElement {
    const banner = document.createElement('div');
    banner.classList.add('banner');
    if (outcome.status === 'correct') {
        banner.classList.add('banner-success');
        banner.textContent = `Correct! Score: ${outcome.score}`;
    } else if (outcome.status === 'wrong_at_line') {
        banner.classList.add('banner-wrong');
        banner.textContent =
            `Your proof fails at line ${outcome.first_failure}: this line's ` +
            'prerequisites may be missing, or it may not belong in the proof.';
    } else {
        banner.classList.add('banner-incomplete');
        banner.textContent =
            'Not correct yet. Check that every required line has been placed.';
    }
    return banner;
}

function blockItem(
    board: Board,
    id: string,
    zone: Zone,
    index: number,
    failed: boolean,
    callbacks: BoardCallbacks,
): HTMLLIElement {
    const item = document.createElement('li');
    item.className = 'block';
    if (failed) item.classList.add('block-failed');
    item.draggable = true;
    item.tabIndex = 0;
    item.dataset.id = id;
    item.setAttribute('role', 'listitem');
    item.setAttribute(
        'aria-label',
        `Proof line, position ${index + 1} of ${ZONE_TITLES[zone].toLowerCase()}. ` +
            'Press Enter to move it to the other zone, arrow keys to reorder.',
    );
    item.innerHTML = board.textOf(id);

    item.addEventListener('dragstart', (event) => {
        event.dataTransfer?.setData('text/plain', id);
        item.classList.add('dragging');
    });
    item.addEventListener('dragend', () => item.classList.remove('dragging'));
    item.addEventListener('dragover', (event) => event.preventDefault());
    item.addEventListener('drop', (event) => {
        event.preventDefault();
        event.stopPropagation();
        const dragged = event.dataTransfer?.getData('text/plain');
        if (dragged && dragged !== id) callbacks.onMove(dragged, zone, index);
    });
    item.addEventListener('keydown', (event) => {
        if (event.key === 'Enter' || event.key === ' ') {
            event.preventDefault();
            callbacks.onTransfer(id);
        } else if (event.key === 'ArrowUp') {
            event.preventDefault();
            callbacks.onNudge(id, -1);
        } else if (event.key === 'ArrowDown') {
            event.preventDefault();
            callbacks.onNudge(id, 1);
        }
    });
    return item;
}

function zoneList(
    board: Board,
    zone: Zone,
    callbacks: BoardCallbacks,
): HTMLElement {
    const section = document.createElement('section');
    section.className = `zone zone-${zone}`;

    const heading = document.createElement('h2');
    heading.textContent = ZONE_TITLES[zone];
    section.appendChild(heading);

    const list = document.createElement('ul');
    list.className = 'zone-list';
    list.dataset.zone = zone;
    list.setAttribute('role', 'list');
    list.setAttribute('aria-label', ZONE_TITLES[zone]);

    const ids = zone === 'starting' ? board.starting : board.target;
    const failedIndex = zone === 'target' ? board.failedIndex() : null;
    ids.forEach((id, index) => {
        list.appendChild(blockItem(board, id, zone, index, index === failedIndex, callbacks));
    });

    list.addEventListener('dragover', (event) => event.preventDefault());
    list.addEventListener('drop', (event) => {
        event.preventDefault();
        const dragged = event.dataTransfer?.getData('text/plain');
        if (dragged) callbacks.onMove(dragged, zone, ids.length);
    });

    section.appendChild(list);
    return section;
}

export function renderApp(root: HTMLElement, state: AppState, callbacks: BoardCallbacks): void {
    root.textContent = '';

    if (state.error !== null) {
        const banner = document.createElement('div');
        banner.className = 'banner banner-error';
        banner.setAttribute('role', 'alert');
        banner.textContent = state.error;
        root.appendChild(banner);
    }

    const board = state.board;
    if (board === null) return;

    if (board.prompt) {
        const prompt = document.createElement('div');
        prompt.className = 'prompt';
        prompt.innerHTML = board.prompt;
        root.appendChild(prompt);
    }

    if (board.lastOutcome) {
        root.appendChild(feedbackBanner(board.lastOutcome));
    }

    const zones = document.createElement('div');
    zones.className = 'zones';
    zones.appendChild(zoneList(board, 'starting', callbacks));
    zones.appendChild(zoneList(board, 'target', callbacks));
    root.appendChild(zones);

    const controls = document.createElement('div');
    controls.className = 'controls';
    const submit = document.createElement('button');
    submit.id = 'submit';
    submit.textContent = state.busy ? 'Grading…' : 'Save & Grade';
    submit.disabled = state.busy;
    submit.addEventListener('click', () => callbacks.onSubmit());
    controls.appendChild(submit);
    root.appendChild(controls);

    if (state.focusId) {
        const focused = root.querySelector<HTMLElement>(`[data-id="${state.focusId}"]`);
        focused?.focus();
    }
}
